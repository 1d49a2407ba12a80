#include "forestlab/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace forestlab {

bool is_permutation(const LeafPermutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

LeafPermutation inverse_permutation(const LeafPermutation& p) {
  LeafPermutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

LeafPermutation identity_permutation(std::size_t n) {
  LeafPermutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  return id;
}

PairedForestDiagram::PairedForestDiagram(DAryForest dom, DAryForest rng,
                                         LeafPermutation p)
    : domain(std::move(dom)), range(std::move(rng)), perm(std::move(p)) {
  if (domain.d() != range.d() || domain.r() != range.r()) {
    throw std::invalid_argument("diagram sides need matching (d,r)");
  }
  if (domain.leaf_count() != range.leaf_count()) {
    throw std::invalid_argument("diagram sides need equal leaf counts");
  }
  if (perm.size() != domain.leaf_count() || !is_permutation(perm)) {
    throw std::invalid_argument("bad leaf permutation");
  }
}

PairedForestDiagram PairedForestDiagram::identity(int d, int r) {
  return PairedForestDiagram(DAryForest(d, r, {}), DAryForest(d, r, {}),
                             identity_permutation(r));
}

std::vector<ReductionMove> PairedForestDiagram::reduction_moves() const {
  std::vector<ReductionMove> moves;
  const int d = this->d();
  const auto& range_leaves = range.leaves();
  for (const auto& c : domain.elementary_carets()) {
    int i = domain.leaf_index(c.child(0));
    int p = perm[i];
    const auto& first_image = range_leaves[p];
    if (first_image.word.empty() || first_image.word.back() != '0') continue;
    CaretAddress q = first_image.parent();
    bool match = true;
    for (int t = 0; t < d && match; ++t) {
      if (perm[i + t] != p + t || !(range_leaves[p + t] == q.child(t))) {
        match = false;
      }
    }
    if (match) moves.push_back(ReductionMove{c, q});
  }
  return moves;
}

PairedForestDiagram PairedForestDiagram::apply_reduction(
    const ReductionMove& move) const {
  const int d = this->d();
  int i = domain.leaf_index(move.domain_caret.child(0));
  int p = range.leaf_index(move.range_caret.child(0));
  if (i < 0 || p < 0 || perm[i] != p) {
    throw std::invalid_argument("reduction move does not apply");
  }
  const int l = static_cast<int>(leaf_count());
  LeafPermutation next(l - d + 1);
  for (int j = 0; j < l - d + 1; ++j) {
    if (j == i) {
      next[j] = p;
      continue;
    }
    int old_index = j < i ? j : j + d - 1;
    int q = perm[old_index];
    next[j] = q < p ? q : q - (d - 1);
  }
  return PairedForestDiagram(domain.remove_caret(move.domain_caret),
                             range.remove_caret(move.range_caret),
                             std::move(next));
}

PairedForestDiagram PairedForestDiagram::reduce() const {
  PairedForestDiagram current = *this;
  for (;;) {
    auto moves = current.reduction_moves();
    if (moves.empty()) return current;
    current = current.apply_reduction(moves.front());
  }
}

PairedForestDiagram PairedForestDiagram::expand_leaf(int leaf_index) const {
  const int l = static_cast<int>(leaf_count());
  if (leaf_index < 0 || leaf_index >= l) {
    throw std::invalid_argument("expand: leaf index out of range");
  }
  const int d = this->d();
  const int i = leaf_index;
  const int p = perm[i];
  LeafPermutation next(l + d - 1);
  for (int j = 0; j < l + d - 1; ++j) {
    if (j >= i && j < i + d) {
      next[j] = p + (j - i);
      continue;
    }
    int old_index = j < i ? j : j - (d - 1);
    int q = perm[old_index];
    next[j] = q < p ? q : q + d - 1;
  }
  return PairedForestDiagram(domain.add_caret(domain.leaves()[i]),
                             range.add_caret(range.leaves()[p]),
                             std::move(next));
}

PairedForestDiagram PairedForestDiagram::expand_to_domain(
    const DAryForest& target) const {
  if (!domain.is_subforest_of(target)) {
    throw std::invalid_argument("expansion target must contain the domain");
  }
  const auto& dom_leaves = domain.leaves();
  std::vector<CaretAddress> images;
  images.reserve(target.leaf_count());
  for (const auto& leaf : target.leaves()) {
    // Strip letters until we hit the domain leaf this slot refines.
    CaretAddress base = leaf;
    while (domain.leaf_index(base) < 0) {
      if (base.word.empty()) {
        throw std::logic_error("target leaf has no ancestor domain leaf");
      }
      base = base.parent();
    }
    const CaretAddress& image_base =
        range.leaves()[perm[domain.leaf_index(base)]];
    images.push_back(CaretAddress{
        image_base.root, image_base.word + leaf.word.substr(base.word.size())});
  }
  DAryForest new_range = DAryForest::from_leaves(d(), r(), images);
  LeafPermutation next(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    next[i] = new_range.leaf_index(images[i]);
  }
  return PairedForestDiagram(target, std::move(new_range), std::move(next));
}

PairedForestDiagram PairedForestDiagram::expand_to_range(
    const DAryForest& target) const {
  return inverted().expand_to_domain(target).inverted();
}

PairedForestDiagram PairedForestDiagram::inverted() const {
  return PairedForestDiagram(range, domain, inverse_permutation(perm));
}

bool PairedForestDiagram::operator==(const PairedForestDiagram& other) const {
  return domain == other.domain && range == other.range && perm == other.perm;
}

bool PairedForestDiagram::operator<(const PairedForestDiagram& other) const {
  return serialize() < other.serialize();
}

std::string PairedForestDiagram::serialize() const {
  nlohmann::ordered_json j;
  j["d"] = d();
  j["r"] = r();
  j["domain"] = domain.address_strings();
  nlohmann::ordered_json rendered = nlohmann::ordered_json::array();
  for (int v : perm) rendered.push_back(v + 1);
  j["perm"] = std::move(rendered);
  j["range"] = range.address_strings();
  return j.dump();
}

PairedForestDiagram PairedForestDiagram::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad diagram JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("r") ||
      !j.contains("domain") || !j.contains("perm") || !j.contains("range")) {
    throw std::invalid_argument(
        "diagram JSON needs d, r, domain, perm, range");
  }
  int d = j.at("d").get<int>();
  int r = j.at("r").get<int>();
  auto read_forest = [&](const char* key) {
    std::vector<CaretAddress> carets;
    for (const auto& item : j.at(key)) {
      carets.push_back(CaretAddress::parse(item.get<std::string>()));
    }
    return DAryForest(d, r, std::move(carets));
  };
  LeafPermutation perm;
  for (const auto& item : j.at("perm")) {
    perm.push_back(item.get<int>() - 1);
  }
  return PairedForestDiagram(read_forest("domain"), read_forest("range"),
                             std::move(perm));
}

}  // namespace forestlab

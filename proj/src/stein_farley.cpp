#include "forestlab/stein_farley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "forestlab/families.hpp"
#include "json.hpp"

namespace forestlab {

namespace {

constexpr std::size_t kMaxCanonicalLeaves = 8;

void require_same_group(int d1, int r1, int d2, int r2) {
  if (d1 != d2 || r1 != r2) {
    throw std::invalid_argument("operands live in different groups");
  }
}

}  // namespace

SFVertex::SFVertex(DAryForest support, VElement rep)
    : support_(std::move(support)), rep_(std::move(rep)) {
  nlohmann::ordered_json j;
  j["support"] = support_.address_strings();
  j["rep"] = nlohmann::ordered_json::parse(rep_.serialize());
  key_ = j.dump();
}

SFVertex SFVertex::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object() || !j.contains("support") || !j.contains("rep")) {
    throw std::invalid_argument("vertex JSON needs support and rep");
  }
  const VElement rep = VElement::parse(j["rep"].dump());
  std::vector<CaretAddress> carets;
  for (const auto& item : j["support"]) {
    carets.push_back(CaretAddress::parse(item.get<std::string>()));
  }
  const DAryForest support(rep.d(), rep.r(), std::move(carets));
  return make_vertex(support, rep);
}

SFVertex make_vertex(const DAryForest& support, const VElement& f) {
  require_same_group(support.d(), support.r(), f.d(), f.r());
  const std::size_t leaf_count = support.leaf_count();
  if (leaf_count > kMaxCanonicalLeaves) {
    throw std::invalid_argument(
        "canonical search supports at most 8 support leaves");
  }
  const DAryForest canon =
      DAryForest::chain(support.d(), support.r(), support.caret_count());

  // Candidates are multiply(forest_bijection(canon, sigma, support), f) over
  // all sigma; when f already acts rigidly on the support cones the product
  // collapses to composing permutations over a fixed diagram.
  const bool rigid = f.diagram().domain.is_subforest_of(support);
  PairedForestDiagram on_support;
  if (rigid) on_support = f.diagram_with_domain(support);

  bool have_best = false;
  PairedForestDiagram best;
  std::string best_key;
  LeafPermutation sigma = identity_permutation(leaf_count);
  do {
    PairedForestDiagram candidate;
    if (rigid) {
      LeafPermutation composed(leaf_count);
      for (std::size_t i = 0; i < leaf_count; ++i) {
        composed[i] = on_support.perm[static_cast<std::size_t>(
            sigma[i])];
      }
      candidate =
          PairedForestDiagram(canon, on_support.range, std::move(composed))
              .reduce();
    } else {
      candidate =
          multiply(VElement::forest_bijection(canon, sigma, support), f)
              .diagram();
    }
    std::string key = candidate.serialize();
    if (!have_best || key < best_key) {
      best = std::move(candidate);
      best_key = std::move(key);
      have_best = true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return SFVertex(canon, VElement(best));
}

bool vertices_equal(const SFVertex& a, const SFVertex& b) { return a == b; }

namespace {

// Shared search behind leq and prec. A shared representative (M1, g) of a
// and (M2, g) of b exists iff for some bijection h of a support onto a's
// cones, w = h * f_a * f_b^{-1} carries a forest M2 onto b's support; M2 is
// then forced to be the domain of w expanded to range b.support().
bool order_search(const SFVertex& a, const SFVertex& b,
                  bool require_elementary) {
  require_same_group(a.d(), a.r(), b.d(), b.r());
  if (a == b) return !require_elementary;
  if (a.height() >= b.height()) return false;
  const VElement u = multiply(a.rep(), b.rep().inverse());
  const std::size_t la = a.support().leaf_count();
  for (const DAryForest& m1 :
       DAryForest::enumerate(a.d(), a.r(), a.height())) {
    LeafPermutation sigma = identity_permutation(la);
    do {
      const VElement w =
          multiply(VElement::forest_bijection(m1, sigma, a.support()), u);
      if (!w.diagram().range.is_subforest_of(b.support())) continue;
      const DAryForest m2 =
          w.diagram().expand_to_range(b.support()).domain;
      if (!m1.is_subforest_of(m2)) continue;
      if (!require_elementary) return true;
      bool elementary = true;
      for (const CaretAddress& c : m2.carets()) {
        if (!m1.has_caret(c) && m1.leaf_index(c) < 0) {
          elementary = false;
          break;
        }
      }
      if (elementary) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return false;
}

}  // namespace

bool vertex_leq(const SFVertex& a, const SFVertex& b) {
  require_same_group(a.d(), a.r(), b.d(), b.r());
  if (a == b) return true;
  return order_search(a, b, false);
}

bool vertex_prec(const SFVertex& a, const SFVertex& b) {
  require_same_group(a.d(), a.r(), b.d(), b.r());
  if (a == b) return false;
  return order_search(a, b, true);
}

SFVertex upper_bound(const SFVertex& a, const SFVertex& b) {
  require_same_group(a.d(), a.r(), b.d(), b.r());
  // Work in the frame where a's element is the identity: the other class
  // becomes [b.support, v]; push b's support through v and merge with a's.
  const VElement v = multiply(b.rep(), a.rep().inverse());
  const DAryForest start =
      DAryForest::forest_union(b.support(), v.diagram().domain);
  const DAryForest image = v.diagram().expand_to_domain(start).range;
  const DAryForest merged = DAryForest::forest_union(image, a.support());
  SFVertex bound = make_vertex(merged, a.rep());
  if (!vertex_leq(a, bound) || !vertex_leq(b, bound)) {
    throw std::logic_error("upper bound construction failed its contract");
  }
  return bound;
}

CubeInterval cube_interval(const SFVertex& bottom,
                           const std::vector<int>& leaf_positions) {
  const DAryForest& support = bottom.support();
  const std::vector<CaretAddress>& leaves = support.leaves();
  std::set<int> seen;
  for (int pos : leaf_positions) {
    if (pos < 0 || pos >= static_cast<int>(leaves.size())) {
      throw std::invalid_argument("leaf position out of range");
    }
    if (!seen.insert(pos).second) {
      throw std::invalid_argument("leaf positions must be distinct");
    }
  }
  CubeInterval cube;
  const std::size_t k = leaf_positions.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> subset;
    std::vector<CaretAddress> carets = support.carets();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        subset.push_back(leaf_positions[i]);
        carets.push_back(leaves[static_cast<std::size_t>(leaf_positions[i])]);
      }
    }
    cube.subsets.push_back(std::move(subset));
    cube.vertices.push_back(make_vertex(
        DAryForest(support.d(), support.r(), std::move(carets)),
        bottom.rep()));
  }
  cube.all_distinct = true;
  std::set<std::string> keys;
  for (const SFVertex& v : cube.vertices) {
    if (!keys.insert(v.key()).second) cube.all_distinct = false;
  }
  return cube;
}

bool cube_is_boolean(const CubeInterval& cube) {
  if (!cube.all_distinct) return false;
  const std::size_t n = cube.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& si = cube.subsets[i];
      const auto& sj = cube.subsets[j];
      const bool subset =
          std::includes(sj.begin(), sj.end(), si.begin(), si.end());
      const bool strict = subset && si.size() < sj.size();
      if (vertex_leq(cube.vertices[i], cube.vertices[j]) != subset) {
        return false;
      }
      if (vertex_prec(cube.vertices[i], cube.vertices[j]) != strict) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// One representative (W, sigma) of the base vertex together with the link
// vertices obtained by removing each elementary caret of W.
struct RepresentativeRecord {
  std::vector<int> vertex_ids;          // per elementary caret
  std::vector<Simplex> freed;           // matching freed position blocks
};

struct LinkAccumulator {
  std::vector<SFVertex> vertices;
  std::vector<Simplex> freed_positions;
  std::map<std::string, int> ids;
  std::set<Simplex> facets;
  std::vector<RepresentativeRecord> records;
};

LinkAccumulator enumerate_descending(const SFVertex& x) {
  LinkAccumulator acc;
  const DAryForest& m = x.support();
  const int d = m.d();
  const std::size_t leaf_count = m.leaf_count();
  for (const DAryForest& w :
       DAryForest::enumerate(m.d(), m.r(), m.caret_count())) {
    const std::vector<CaretAddress> elems = w.elementary_carets();
    if (elems.empty()) continue;
    LeafPermutation sigma = identity_permutation(leaf_count);
    do {
      const VElement g =
          multiply(VElement::forest_bijection(w, sigma, m), x.rep());
      RepresentativeRecord record;
      Simplex facet;
      for (const CaretAddress& c : elems) {
        const SFVertex y = make_vertex(w.remove_caret(c), g);
        Simplex freed;
        const int base = w.leaf_index(c.child(0));
        for (int t = 0; t < d; ++t) {
          freed.push_back(sigma[static_cast<std::size_t>(base + t)]);
        }
        freed = make_simplex(std::move(freed));
        int id;
        auto it = acc.ids.find(y.key());
        if (it == acc.ids.end()) {
          id = static_cast<int>(acc.vertices.size());
          acc.ids.emplace(y.key(), id);
          acc.vertices.push_back(y);
          acc.freed_positions.push_back(freed);
        } else {
          id = it->second;
          if (acc.freed_positions[static_cast<std::size_t>(id)] != freed) {
            throw std::logic_error(
                "freed-position projection is not well defined");
          }
        }
        record.vertex_ids.push_back(id);
        record.freed.push_back(std::move(freed));
        facet.push_back(id);
      }
      acc.facets.insert(make_simplex(facet));
      acc.records.push_back(std::move(record));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return acc;
}

DescendingLinkData assemble_descending(const SFVertex& x,
                                       const LinkAccumulator& acc) {
  DescendingLinkData data;
  data.vertices = acc.vertices;
  data.freed_positions = acc.freed_positions;
  std::vector<std::string> labels;
  for (const SFVertex& v : acc.vertices) labels.push_back(v.key());
  data.complex = SimplicialComplex::from_facets(
      std::vector<Simplex>(acc.facets.begin(), acc.facets.end()),
      std::move(labels));

  const int leaf_count = static_cast<int>(x.support().leaf_count());
  const SimplicialComplex target = hypergraph_complex(leaf_count, x.d());
  std::map<std::vector<int>, int> target_id;
  const std::vector<std::vector<int>> sets =
      hypergraph_vertex_sets(leaf_count, x.d());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    target_id[sets[i]] = static_cast<int>(i);
  }
  std::vector<int> vertex_map(acc.vertices.size(), -1);
  for (std::size_t i = 0; i < acc.vertices.size(); ++i) {
    std::vector<int> one_based;
    for (int pos : acc.freed_positions[i]) one_based.push_back(pos + 1);
    vertex_map[i] = target_id.at(one_based);
  }
  data.projection.source = data.complex;
  data.projection.target = target;
  data.projection.vertex_map = std::move(vertex_map);
  data.join_report = analyze_join(data.projection);
  return data;
}

}  // namespace

DescendingLinkData descending_link(const SFVertex& x) {
  return assemble_descending(x, enumerate_descending(x));
}

LocalLinkReport local_link_flag_check(const SFVertex& x) {
  const LinkAccumulator acc = enumerate_descending(x);
  LocalLinkReport report;
  report.descending = assemble_descending(x, acc);

  const DAryForest& m = x.support();
  const std::vector<CaretAddress>& leaves = m.leaves();
  const int desc_count = static_cast<int>(acc.vertices.size());
  std::vector<std::string> labels;
  for (const SFVertex& v : acc.vertices) labels.push_back(v.key());
  for (const CaretAddress& leaf : leaves) {
    const SFVertex up = make_vertex(m.add_caret(leaf), x.rep());
    labels.push_back(up.key());
    report.ascending.push_back(up);
  }

  std::set<Simplex> facets;
  const std::size_t leaf_count = leaves.size();
  // The empty descending part allows every ascending direction at once.
  {
    Simplex all_up;
    for (std::size_t pos = 0; pos < leaf_count; ++pos) {
      all_up.push_back(desc_count + static_cast<int>(pos));
    }
    if (!all_up.empty()) facets.insert(all_up);
  }
  for (const RepresentativeRecord& record : acc.records) {
    const std::size_t e = record.vertex_ids.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << e); ++mask) {
      Simplex facet;
      std::vector<char> blocked(leaf_count, 0);
      for (std::size_t i = 0; i < e; ++i) {
        if (!(mask & (std::size_t{1} << i))) continue;
        facet.push_back(record.vertex_ids[i]);
        for (int pos : record.freed[i]) {
          blocked[static_cast<std::size_t>(pos)] = 1;
        }
      }
      for (std::size_t pos = 0; pos < leaf_count; ++pos) {
        if (!blocked[pos]) facet.push_back(desc_count + static_cast<int>(pos));
      }
      facets.insert(make_simplex(facet));
    }
  }
  report.combined = SimplicialComplex::from_facets(
      std::vector<Simplex>(facets.begin(), facets.end()), std::move(labels));
  report.descending_flag = report.descending.complex.is_flag();
  report.combined_flag = report.combined.is_flag();
  report.flags_agree = report.descending_flag == report.combined_flag;
  return report;
}

std::vector<VElement> forest_stabilizer(const DAryForest& m) {
  if (m.leaf_count() > kMaxCanonicalLeaves) {
    throw std::invalid_argument("stabilizer enumeration needs at most 8 leaves");
  }
  std::vector<VElement> out;
  LeafPermutation sigma = identity_permutation(m.leaf_count());
  do {
    out.push_back(VElement::forest_bijection(m, sigma, m));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace forestlab

#include "forestlab/forest.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace forestlab {

std::string CaretAddress::str() const {
  return std::to_string(root) + ":" + word;
}

CaretAddress CaretAddress::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("caret address needs '<root>:<word>': " + text);
  }
  CaretAddress a;
  try {
    std::size_t used = 0;
    a.root = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad root index in caret address: " + text);
  }
  a.word = text.substr(colon + 1);
  for (char c : a.word) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad slot digit in caret address: " + text);
    }
  }
  return a;
}

CaretAddress CaretAddress::child(int slot) const {
  return CaretAddress{root, word + static_cast<char>('0' + slot)};
}

CaretAddress CaretAddress::parent() const {
  if (word.empty()) throw std::logic_error("root caret has no parent");
  return CaretAddress{root, word.substr(0, word.size() - 1)};
}

bool CaretAddress::is_prefix_of(const CaretAddress& other) const {
  return root == other.root && other.word.size() >= word.size() &&
         other.word.compare(0, word.size(), word) == 0;
}

namespace {

void build_leaves(const DAryForest& f, const CaretAddress& node,
                  std::vector<CaretAddress>* out) {
  if (!f.has_caret(node)) {
    out->push_back(node);
    return;
  }
  for (int slot = 0; slot < f.d(); ++slot) {
    build_leaves(f, node.child(slot), out);
  }
}

}  // namespace

DAryForest::DAryForest(int d, int r, std::vector<CaretAddress> carets)
    : d_(d), r_(r), carets_(std::move(carets)) {
  if (d_ < 2) throw std::invalid_argument("forest arity d must be >= 2");
  if (d_ > 10) throw std::invalid_argument("forest arity d > 10 unsupported");
  if (r_ < 1) throw std::invalid_argument("forest needs at least one root");
  std::sort(carets_.begin(), carets_.end());
  carets_.erase(std::unique(carets_.begin(), carets_.end()), carets_.end());
  for (const auto& c : carets_) {
    if (c.root < 0 || c.root >= r_) {
      throw std::invalid_argument("caret root out of range: " + c.str());
    }
    for (char w : c.word) {
      if (w >= '0' + d_) {
        throw std::invalid_argument("caret slot exceeds arity: " + c.str());
      }
    }
    if (!c.word.empty() && !has_caret(c.parent())) {
      throw std::invalid_argument("caret set not prefix closed at " + c.str());
    }
  }
  leaves_.reserve(r_ + carets_.size() * (d_ - 1));
  for (int root = 0; root < r_; ++root) {
    build_leaves(*this, CaretAddress{root, ""}, &leaves_);
  }
}

std::size_t DAryForest::leaf_count() const {
  return r_ + carets_.size() * (d_ - 1);
}

bool DAryForest::has_caret(const CaretAddress& a) const {
  return std::binary_search(carets_.begin(), carets_.end(), a);
}

const std::vector<CaretAddress>& DAryForest::leaves() const { return leaves_; }

int DAryForest::leaf_index(const CaretAddress& a) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), a);
  if (it == leaves_.end() || !(*it == a)) return -1;
  return static_cast<int>(it - leaves_.begin());
}

std::vector<CaretAddress> DAryForest::elementary_carets() const {
  std::vector<CaretAddress> out;
  for (const auto& c : carets_) {
    bool elementary = true;
    for (int slot = 0; slot < d_ && elementary; ++slot) {
      if (has_caret(c.child(slot))) elementary = false;
    }
    if (elementary) out.push_back(c);
  }
  return out;
}

DAryForest DAryForest::add_caret(const CaretAddress& leaf_slot) const {
  if (leaf_index(leaf_slot) < 0) {
    throw std::invalid_argument("caret must be attached at a leaf slot: " +
                                leaf_slot.str());
  }
  auto carets = carets_;
  carets.push_back(leaf_slot);
  return DAryForest(d_, r_, std::move(carets));
}

DAryForest DAryForest::remove_caret(const CaretAddress& elementary) const {
  if (!has_caret(elementary)) {
    throw std::invalid_argument("no caret at " + elementary.str());
  }
  for (int slot = 0; slot < d_; ++slot) {
    if (has_caret(elementary.child(slot))) {
      throw std::invalid_argument("caret is not elementary: " +
                                  elementary.str());
    }
  }
  std::vector<CaretAddress> carets;
  carets.reserve(carets_.size() - 1);
  for (const auto& c : carets_) {
    if (!(c == elementary)) carets.push_back(c);
  }
  return DAryForest(d_, r_, std::move(carets));
}

bool DAryForest::is_subforest_of(const DAryForest& other) const {
  if (d_ != other.d_ || r_ != other.r_) return false;
  return std::includes(other.carets_.begin(), other.carets_.end(),
                       carets_.begin(), carets_.end());
}

bool DAryForest::operator==(const DAryForest& other) const {
  return d_ == other.d_ && r_ == other.r_ && carets_ == other.carets_;
}

bool DAryForest::operator<(const DAryForest& other) const {
  if (d_ != other.d_) return d_ < other.d_;
  if (r_ != other.r_) return r_ < other.r_;
  return carets_ < other.carets_;
}

std::vector<std::string> DAryForest::address_strings() const {
  std::vector<std::string> out;
  out.reserve(carets_.size());
  for (const auto& c : carets_) out.push_back(c.str());
  return out;
}

DAryForest DAryForest::forest_union(const DAryForest& a, const DAryForest& b) {
  if (a.d_ != b.d_ || a.r_ != b.r_) {
    throw std::invalid_argument("forest union needs matching (d,r)");
  }
  auto carets = a.carets_;
  carets.insert(carets.end(), b.carets_.begin(), b.carets_.end());
  return DAryForest(a.d_, a.r_, std::move(carets));
}

DAryForest DAryForest::from_leaves(int d, int r,
                                   const std::vector<CaretAddress>& leaf_slots) {
  std::set<CaretAddress> carets;
  for (const auto& leaf : leaf_slots) {
    CaretAddress a = leaf;
    while (!a.word.empty()) {
      a = a.parent();
      carets.insert(a);
    }
  }
  DAryForest f(d, r, std::vector<CaretAddress>(carets.begin(), carets.end()));
  std::vector<CaretAddress> sorted = leaf_slots;
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted == f.leaves())) {
    throw std::invalid_argument("slots do not form the leaf set of a forest");
  }
  return f;
}

DAryForest DAryForest::chain(int d, int r, std::size_t k) {
  std::vector<CaretAddress> carets;
  std::string word;
  for (std::size_t i = 0; i < k; ++i) {
    carets.push_back(CaretAddress{0, word});
    word += '0';
  }
  return DAryForest(d, r, std::move(carets));
}

std::vector<DAryForest> DAryForest::enumerate(int d, int r, std::size_t k) {
  std::set<DAryForest> current;
  current.insert(DAryForest(d, r, {}));
  for (std::size_t step = 0; step < k; ++step) {
    std::set<DAryForest> next;
    for (const auto& f : current) {
      for (const auto& leaf : f.leaves()) {
        next.insert(f.add_caret(leaf));
      }
    }
    current.swap(next);
  }
  return std::vector<DAryForest>(current.begin(), current.end());
}

}  // namespace forestlab

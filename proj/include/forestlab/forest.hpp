#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace forestlab {

// Address of a caret (internal node) in a (d,r)-forest: index of the tree it
// belongs to and the path word from that tree's root, one character per child
// slot ('0'..'d-1'). The root caret of tree j has the empty word and renders
// as "j:".
struct CaretAddress {
  int root = 0;
  std::string word;

  auto operator<=>(const CaretAddress&) const = default;

  std::string str() const;
  static CaretAddress parse(const std::string& text);

  CaretAddress child(int slot) const;
  CaretAddress parent() const;  // requires a nonempty word
  bool is_prefix_of(const CaretAddress& other) const;  // proper or equal
};

// A finite (d,r)-forest: r ordered d-ary trees, stored as the prefix-closed
// set of caret addresses. Leaves are ordered depth first with trees taken in
// root order; a forest with k carets has r + k*(d-1) leaves.
class DAryForest {
 public:
  DAryForest() = default;
  DAryForest(int d, int r, std::vector<CaretAddress> carets);

  int d() const { return d_; }
  int r() const { return r_; }
  std::size_t caret_count() const { return carets_.size(); }
  std::size_t leaf_count() const;

  const std::vector<CaretAddress>& carets() const { return carets_; }
  bool has_caret(const CaretAddress& a) const;

  // Leaf slots in depth-first order. A leaf slot is an address at which no
  // caret sits; reuses CaretAddress as a plain tree address.
  const std::vector<CaretAddress>& leaves() const;
  // Index of a leaf address in leaves(), -1 if absent.
  int leaf_index(const CaretAddress& a) const;

  // Carets all of whose child slots are leaves.
  std::vector<CaretAddress> elementary_carets() const;

  DAryForest add_caret(const CaretAddress& leaf_slot) const;
  DAryForest remove_caret(const CaretAddress& elementary) const;

  bool is_subforest_of(const DAryForest& other) const;
  bool operator==(const DAryForest& other) const;
  bool operator<(const DAryForest& other) const;

  std::vector<std::string> address_strings() const;

  // The forest whose caret set is the union; smallest common expansion.
  static DAryForest forest_union(const DAryForest& a, const DAryForest& b);

  // Forest whose leaf set is exactly `leaf_slots` (caret set = all proper
  // prefixes). Throws if the slots do not form the leaf set of a forest.
  static DAryForest from_leaves(int d, int r,
                                const std::vector<CaretAddress>& leaf_slots);

  // Left chain on tree 0: carets 0:, 0:0, 0:00, ... This is the
  // lexicographically least forest with k carets (checked by enumeration in
  // the tests).
  static DAryForest chain(int d, int r, std::size_t k);

  // All (d,r)-forests with exactly k carets.
  static std::vector<DAryForest> enumerate(int d, int r, std::size_t k);

 private:
  int d_ = 2;
  int r_ = 1;
  std::vector<CaretAddress> carets_;  // sorted
  std::vector<CaretAddress> leaves_;  // depth-first, built on construction
};

}  // namespace forestlab

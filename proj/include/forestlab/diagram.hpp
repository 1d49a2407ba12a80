#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forestlab/forest.hpp"

namespace forestlab {

// Permutation in one-line notation, 0-based: perm[i] = image of i. Rendered
// 1-based in JSON and other text output.
using LeafPermutation = std::vector<int>;

bool is_permutation(const LeafPermutation& p);
LeafPermutation inverse_permutation(const LeafPermutation& p);
LeafPermutation identity_permutation(std::size_t n);

// A matched pair of elementary carets that can be cancelled: child leaves of
// `domain_caret` occupy positions i..i+d-1 on the domain side and are sent in
// order to the child leaves of `range_caret` at positions p..p+d-1.
struct ReductionMove {
  CaretAddress domain_caret;
  CaretAddress range_caret;
};

// Paired (d,r)-forest diagram (F-, perm, F+): two (d,r)-forests with the same
// leaf count, with perm[i] = position of the F+ leaf matched with the i-th
// F- leaf.
struct PairedForestDiagram {
  DAryForest domain;
  DAryForest range;
  LeafPermutation perm;

  PairedForestDiagram() = default;
  PairedForestDiagram(DAryForest dom, DAryForest rng, LeafPermutation p);

  int d() const { return domain.d(); }
  int r() const { return domain.r(); }
  std::size_t leaf_count() const { return domain.leaf_count(); }

  static PairedForestDiagram identity(int d, int r);

  std::vector<ReductionMove> reduction_moves() const;
  bool is_reduced() const { return reduction_moves().empty(); }
  PairedForestDiagram apply_reduction(const ReductionMove& move) const;
  // Cancels matched caret pairs until none remains; the result is independent
  // of the cancellation order (exercised exhaustively by the tests).
  PairedForestDiagram reduce() const;

  // Inverse of a single reduction: grows a caret below domain leaf
  // `leaf_index` (0-based) and below its matched range leaf, matching the new
  // leaves in order.
  PairedForestDiagram expand_leaf(int leaf_index) const;

  // Unique equivalent diagram with the given domain forest; requires
  // domain.is_subforest_of(target).
  PairedForestDiagram expand_to_domain(const DAryForest& target) const;
  PairedForestDiagram expand_to_range(const DAryForest& target) const;

  PairedForestDiagram inverted() const;  // swaps the two sides

  bool operator==(const PairedForestDiagram& other) const;
  // Comparison of serialized forms; "least" always means least under this.
  bool operator<(const PairedForestDiagram& other) const;

  std::string serialize() const;  // compact JSON text
  static PairedForestDiagram parse(const std::string& json_text);
};

}  // namespace forestlab

#pragma once

#include <string>
#include <vector>

#include "forestlab/simplicial.hpp"
#include "forestlab/simplicial_map.hpp"
#include "forestlab/velement.hpp"

namespace forestlab {

using SuitedForest = DAryForest;

// Vertex of the expansion poset: the class [support, element] of pairs, where
// (M1, f1) and (M2, f2) are identified iff multiply(f1, f2.inverse()) maps
// the leaf cones of M1 onto the leaf cones of M2. The stored form is
// canonical: the support is the chain forest with the matching caret count,
// and the element is the least representative over that support, so classes
// compare by string equality of key().
class SFVertex {
 public:
  const DAryForest& support() const { return support_; }
  const VElement& rep() const { return rep_; }
  std::size_t height() const { return support_.caret_count(); }
  int d() const { return support_.d(); }
  int r() const { return support_.r(); }

  bool operator==(const SFVertex& other) const { return key_ == other.key_; }
  bool operator!=(const SFVertex& other) const { return !(*this == other); }
  bool operator<(const SFVertex& other) const {
    if (height() != other.height()) return height() < other.height();
    return key_ < other.key_;
  }

  const std::string& key() const { return key_; }
  std::string serialize() const { return key_; }
  // Accepts any {"support":[...],"rep":{...}} pair and canonicalizes.
  static SFVertex parse(const std::string& json_text);

 private:
  friend SFVertex make_vertex(const DAryForest& support, const VElement& f);
  SFVertex(DAryForest support, VElement rep);

  DAryForest support_;
  VElement rep_;
  std::string key_;
};

// Canonical vertex of the class of (support, f). The canonical search
// enumerates the symmetric group on the support leaves, so the support may
// have at most 8 leaves.
SFVertex make_vertex(const DAryForest& support, const VElement& f);
bool vertices_equal(const SFVertex& a, const SFVertex& b);

// Partial order: a <= b iff the classes admit representatives (M1, g) and
// (M2, g) with a shared element and M1 a subforest of M2.
bool vertex_leq(const SFVertex& a, const SFVertex& b);
// Strict relation "b is built from a by attaching single carets at distinct
// leaves of a's support": as above with every caret of M2 \ M1 sitting at a
// leaf of M1.
bool vertex_prec(const SFVertex& a, const SFVertex& b);

// Least common coarsening of the two cone partitions; the result satisfies
// vertex_leq(a, .) and vertex_leq(b, .) (verified before returning).
SFVertex upper_bound(const SFVertex& a, const SFVertex& b);

// The interval above `bottom` spanned by attaching carets at a chosen set of
// distinct leaf positions of its support: one vertex per subset, listed in
// bitmask order (so vertices.front() is bottom and vertices.back() the top).
struct CubeInterval {
  std::vector<std::vector<int>> subsets;  // of the chosen leaf positions
  std::vector<SFVertex> vertices;
  bool all_distinct = false;
};
CubeInterval cube_interval(const SFVertex& bottom,
                           const std::vector<int>& leaf_positions);
// Full pairwise order check: leq iff subset inclusion, prec iff strict
// inclusion. Quadratic in 2^k, intended for small cubes.
bool cube_is_boolean(const CubeInterval& cube);

// Descending link of x = [M, f] with k carets and L leaves: vertices are the
// classes [W minus c, g] over representatives (W, g) of x and elementary
// carets c of W; the simplices over a fixed representative remove disjoint
// carets. Each link vertex projects to the d-subset of M-leaf positions it
// frees up, giving a simplicial map onto the complex of disjoint d-subsets
// of the L positions.
struct DescendingLinkData {
  std::vector<SFVertex> vertices;
  std::vector<Simplex> freed_positions;  // per vertex: d support-leaf slots
  SimplicialComplex complex;
  SimplicialMap projection;
  JoinReport join_report;
};
DescendingLinkData descending_link(const SFVertex& x);

// Whole-link probe around x: descending directions as above plus one
// ascending direction per support leaf (attach a caret there). A mixed set
// spans a simplex iff over a common representative the removed carets are
// disjoint and the attached carets avoid the freed positions. Reports whether
// the descending part and the combined link agree on being flag.
struct LocalLinkReport {
  DescendingLinkData descending;
  std::vector<SFVertex> ascending;  // per support-leaf position
  SimplicialComplex combined;
  bool descending_flag = false;
  bool combined_flag = false;
  bool flags_agree = false;
};
LocalLinkReport local_link_flag_check(const SFVertex& x);

// All elements with a representative (m, sigma, m); the stabilizer of the
// class [m, f] acts by left multiplication.
std::vector<VElement> forest_stabilizer(const DAryForest& m);

}  // namespace forestlab

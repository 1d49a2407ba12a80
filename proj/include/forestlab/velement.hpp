#pragma once

#include <random>
#include <string>

#include "forestlab/diagram.hpp"

namespace forestlab {

// An element of the Higman-Thompson group V_{d,r}: an equivalence class of
// paired (d,r)-forest diagrams, held by its unique reduced representative.
// Read as a map of cone partitions: the cone below the i-th domain leaf is
// translated rigidly onto the cone below range leaf perm[i].
class VElement {
 public:
  explicit VElement(const PairedForestDiagram& diagram)
      : canon_(diagram.reduce()) {}

  static VElement identity(int d, int r) {
    return VElement(PairedForestDiagram::identity(d, r));
  }

  const PairedForestDiagram& diagram() const { return canon_; }
  int d() const { return canon_.d(); }
  int r() const { return canon_.r(); }

  bool is_identity() const {
    return canon_.domain.caret_count() == 0 &&
           canon_.perm == identity_permutation(canon_.perm.size());
  }

  bool operator==(const VElement& other) const { return canon_ == other.canon_; }
  bool operator<(const VElement& other) const { return canon_ < other.canon_; }

  VElement inverse() const { return VElement(canon_.inverted()); }

  // Representative with the given domain forest (unique); requires the
  // reduced domain to be a subforest of `target`.
  PairedForestDiagram diagram_with_domain(const DAryForest& target) const {
    return canon_.expand_to_domain(target);
  }

  // True when this element sends the leaf cones of m1 bijectively and rigidly
  // onto the leaf cones of m2, i.e. it has a representative (m1, sigma, m2).
  bool maps_forest_onto(const DAryForest& m1, const DAryForest& m2) const;

  // The element with representative (m1, sigma, m2).
  static VElement forest_bijection(const DAryForest& m1,
                                   const LeafPermutation& sigma,
                                   const DAryForest& m2) {
    return VElement(PairedForestDiagram(m1, m2, sigma));
  }

  // Uniform caret count in [0, max_carets] for each side, carets attached at
  // uniformly random leaves, uniform leaf matching.
  static VElement random_element(std::mt19937_64& rng, int d, int r,
                                 int max_carets);

  std::string serialize() const { return canon_.serialize(); }
  static VElement parse(const std::string& json_text) {
    return VElement(PairedForestDiagram::parse(json_text));
  }

 private:
  PairedForestDiagram canon_;
};

// Diagram composition, left to right: the result first applies a, then b.
VElement multiply(const VElement& a, const VElement& b);

}  // namespace forestlab

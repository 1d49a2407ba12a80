#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "forestlab/simplicial.hpp"

namespace forestlab {

using BigInt = boost::multiprecision::cpp_int;

// One reduced homology group: free rank plus invariant factors > 1.
struct HomologyGroup {
  int dim = 0;
  long long rank = 0;
  std::vector<BigInt> torsion;
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return dim == o.dim && rank == o.rank && torsion == o.torsion;
  }
};

// Reduced integral homology in degrees -1 .. dim (augmented chain complex,
// so the empty complex reports rank 1 in degree -1).
using HomologyProfile = std::vector<HomologyGroup>;

HomologyProfile reduced_homology(const SimplicialComplex& cx);
std::string homology_to_json(const HomologyProfile& profile);
HomologyProfile homology_from_json(const std::string& json_text);

// Largest m such that reduced homology vanishes in all degrees <= m, with
// conventions: -2 for the empty complex, kAcyclicSentinel when homology
// vanishes through the top dimension.
inline constexpr int kAcyclicSentinel = std::numeric_limits<int>::max();
int homological_connectivity(const SimplicialComplex& cx);
// True when the complex is homologically m-connected; every complex is
// (-2)-connected and below, nonempty means (-1)-connected. Early-exits, so it
// is cheaper than full connectivity when m is small.
bool is_homologically_connected(const SimplicialComplex& cx, int m);

// Weakly Cohen-Macaulay of dimension n: the complex is (n-1)-connected and
// the link of every p-simplex is (n-p-2)-connected.
struct WcmReport {
  bool verdict = true;
  int n = 0;
  std::vector<std::string> violations;
};
WcmReport wcm_report(const SimplicialComplex& cx, int n);
bool is_wcm(const SimplicialComplex& cx, int n);

// Sparse integer column-style matrix feeding the elimination engine.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::map<int, BigInt>> cols;
};

// Boundary matrix of the augmented chain complex: rows = (d-1)-faces,
// columns = d-faces; for d = 0 a single augmentation row; for d = -1 a
// zero-row matrix with one column.
SparseMatrix boundary_matrix(const SimplicialComplex& cx, int d);

struct SmithSummary {
  std::size_t rank = 0;
  std::vector<BigInt> nontrivial_factors;  // invariant factors > 1, in order
};
SmithSummary smith_summary(SparseMatrix matrix, bool want_torsion);

// Rational-rank data for the map induced on reduced homology by an inclusion
// of complexes sharing vertex ids (every simplex of sub must lie in whole).
struct DegreeMapReport {
  int degree = 0;
  long long rank_sub = 0;    // dim of reduced homology of the subcomplex
  long long rank_whole = 0;  // dim of reduced homology of the whole complex
  long long rank_image = 0;
  bool injective = false;
  bool surjective = false;
  bool iso() const { return injective && surjective; }
};
std::vector<DegreeMapReport> inclusion_homology_maps(
    const SimplicialComplex& sub, const SimplicialComplex& whole,
    int max_degree);

// Checks: iso in degrees -1..m and surjective in degree m+1 (over Q).
struct InclusionConclusion {
  bool holds = true;
  int m = 0;
  std::vector<DegreeMapReport> degrees;
  std::string violation;
};
InclusionConclusion inclusion_iso_through_epi(const SimplicialComplex& sub,
                                              const SimplicialComplex& whole,
                                              int m);

// Consistency probe: Euler characteristic must equal the alternating sum of
// reduced ranks plus 1 (the augmentation shift).
bool euler_matches_homology(const SimplicialComplex& cx,
                            const HomologyProfile& profile);

}  // namespace forestlab

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "forestlab/homology.hpp"
#include "forestlab/simplicial.hpp"

namespace forestlab {

// Vertex heights are fixed-arity integer tuples compared lexicographically.
using HeightTuple = std::vector<long long>;

struct HeightFunction {
  int arity = 1;
  std::vector<HeightTuple> values;  // indexed by vertex id
};

bool height_less(const HeightTuple& a, const HeightTuple& b);

struct HeightCheck {
  bool valid = true;
  std::string violation;
};
// Every present vertex needs a tuple of the declared arity, and no edge may
// have endpoints of equal height.
HeightCheck check_height(const SimplicialComplex& cx, const HeightFunction& h);

// Full subcomplex on the vertices of height <= t.
SimplicialComplex sublevel_complex(const SimplicialComplex& cx,
                                   const HeightFunction& h,
                                   const HeightTuple& t);

// Full subcomplex of the link of v on its strictly lower neighbors.
SimplicialComplex morse_descending_link(const SimplicialComplex& cx,
                                        const HeightFunction& h, int v);

struct MorseReport {
  bool hypothesis_holds = true;
  std::vector<int> hypothesis_violations;  // vertices with a bad link
  bool conclusion_holds = true;
  InclusionConclusion conclusion;
  // False only when the hypothesis holds and the conclusion fails.
  bool consistent = true;
};
// Hypothesis: every vertex above cutoff s has an m-connected descending link.
// Conclusion: the sublevel complex at s includes into the whole complex by an
// isomorphism on reduced homology through degree m and a surjection in
// degree m+1.
MorseReport morse_lemma_verify(const SimplicialComplex& cx,
                               const HeightFunction& h, const HeightTuple& s,
                               int m);

// Assigns to each simplex a distinguished face (its "bar"). Contract checked
// by check_bar: bar(sigma) is a face of sigma; monotone, meaning
// bar(tau) is a face of bar(sigma) whenever tau is a face of sigma (verified
// on codimension-1 faces, which suffices by transitivity); and idempotent,
// meaning bar(bar(sigma)) = bar(sigma) whenever bar(sigma) is nonempty.
struct BarOperator {
  std::function<Simplex(const Simplex&)> bar;
};

struct BarCheck {
  bool valid = true;
  std::string violation;
};
BarCheck check_bar(const SimplicialComplex& cx, const BarOperator& op);

struct BadSimplexReport {
  bool hypothesis_holds = true;
  std::vector<Simplex> bad_simplices;        // bar(sigma) == sigma, nonempty
  std::vector<Simplex> hypothesis_violations;
  SimplicialComplex good_subcomplex;         // simplices with empty bar
  bool conclusion_holds = true;
  InclusionConclusion conclusion;
  bool consistent = true;
};
// Hypothesis: for every bad simplex sigma, the complex of coface extensions
// keeping the same bar is (m - dim sigma)-connected. Conclusion: the good
// subcomplex includes into the whole complex as iso through m, epi at m+1.
BadSimplexReport bad_simplex_analyze(const SimplicialComplex& cx,
                                     const BarOperator& op, int m);

// For a bad simplex sigma: vertices u outside sigma such that sigma+{u} is a
// simplex with the same bar; simplices = tau with bar(sigma+tau) = bar(sigma).
SimplicialComplex good_extension_link(const SimplicialComplex& cx,
                                      const BarOperator& op, const Simplex& s);

// Bar = the vertices of sigma whose color repeats inside sigma.
BarOperator coloring_to_bar(const std::vector<int>& colors);
// Bar = the vertices of sigma flagged as bad.
BarOperator partition_to_bar(const std::vector<char>& good_vertex);

}  // namespace forestlab

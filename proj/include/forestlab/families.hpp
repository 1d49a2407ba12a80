#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forestlab/simplicial.hpp"

namespace forestlab {

// Complex of disjoint d-subsets of {1..n}: one vertex per d-subset, listed in
// lexicographic order, and a collection of subsets spans a simplex iff the
// subsets are pairwise disjoint.
SimplicialComplex hypergraph_complex(int n, int d);
std::vector<std::vector<int>> hypergraph_vertex_sets(int n, int d);
// Dimension in which the family is expected to be weakly Cohen-Macaulay.
int hypergraph_wcm_dimension(int n, int d);

enum class PairMode { injective, extended };

// Complex on pairs (h, b) of vertices of the two factors. A set of pairs is a
// simplex when the h-coordinates are pairwise distinct and span a simplex of
// the first factor, and the set of b-coordinates (deduplicated) spans a
// simplex of the second factor; injective mode additionally requires the
// b-coordinates to be pairwise distinct. Vertex ids follow
// pair_vertex_id(h, b) = h * bpart.vertex_slots() + b.
SimplicialComplex pair_complex(const SimplicialComplex& hpart,
                               const SimplicialComplex& bpart, PairMode mode);
int pair_vertex_id(int h, int b, const SimplicialComplex& bpart);
std::pair<int, int> pair_vertex_split(int id, const SimplicialComplex& bpart);

// Nerve of a family of subcomplexes sharing ambient vertex ids: one vertex
// per member, and a set of members spans a simplex iff they have a vertex in
// common (equivalently, their intersection is a nonempty subcomplex).
SimplicialComplex nerve_complex(const std::vector<SimplicialComplex>& members);

struct HypergraphTableRow {
  int n = 0;
  int d = 0;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  bool flag = false;
  int wcm_dim = 0;
  bool wcm_ok = false;
  int connectivity = 0;  // kAcyclicSentinel when acyclic through the top
};

// One row per pair (d, n) with 2 <= d <= dmax and d <= n <= nmax; `jobs`
// worker threads share the grid.
std::vector<HypergraphTableRow> hypergraph_table(int nmax, int dmax, int jobs);
std::string hypergraph_table_csv(const std::vector<HypergraphTableRow>& rows);

}  // namespace forestlab

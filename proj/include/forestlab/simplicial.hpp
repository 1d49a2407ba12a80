#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace forestlab {

// A simplex as a strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

Simplex make_simplex(std::vector<int> vertices);  // sorts, rejects duplicates
bool simplex_subset(const Simplex& a, const Simplex& b);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_difference(const Simplex& a, const Simplex& b);
bool simplices_disjoint(const Simplex& a, const Simplex& b);

// A finite simplicial complex stored by its facets. Vertex ids run in
// [0, vertex_slots()); a vertex is part of the complex iff it lies in some
// facet, so slots may be unused (an isolated vertex is a singleton facet).
// Labels are carried per slot and survive sub-structure operations, which
// keep the ambient ids so that inclusions stay id-compatible.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::vector<Simplex> facets,
                                       std::vector<std::string> labels = {});

  int vertex_slots() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_vertex(int v) const;
  std::vector<int> vertex_ids() const;
  std::size_t vertex_count() const;

  bool is_empty() const { return facets_.empty(); }
  // Largest simplex dimension; -1 for the empty complex.
  int dim() const;

  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<Simplex>& faces(int dim) const;  // memoized
  std::vector<Simplex> all_faces() const;            // dims 0..top
  std::vector<std::size_t> f_vector() const;         // counts, index = dim
  std::size_t face_count() const;
  long long euler_characteristic() const;

  bool contains(const Simplex& s) const;

  SimplicialComplex link(const Simplex& s) const;
  SimplicialComplex star(const Simplex& s) const;  // closed star
  SimplicialComplex full_subcomplex(const std::vector<int>& vertices) const;

  // Simplices of the join are unions; b's ids are shifted by a.vertex_slots().
  static SimplicialComplex join(const SimplicialComplex& a,
                                const SimplicialComplex& b);

  // Flag completion of the 1-skeleton.
  SimplicialComplex clique_complex() const;
  struct FlagReport {
    bool flag = true;
    Simplex witness;  // a clique that is not a simplex, when !flag
  };
  FlagReport flag_report() const;
  bool is_flag() const { return flag_report().flag; }

  // Vertices = simplices, simplices = chains under proper inclusion.
  SimplicialComplex barycentric_subdivision() const;

  bool operator==(const SimplicialComplex& other) const;

  std::string serialize() const;  // {"vertices":[labels],"facets":[[ids]]}
  static SimplicialComplex parse(const std::string& json_text);

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;  // sorted, deduplicated, maximal
  std::vector<char> present_;
  mutable std::map<int, std::vector<Simplex>> face_cache_;
  mutable std::mutex cache_mutex_;

 public:
  SimplicialComplex(const SimplicialComplex& other);
  SimplicialComplex& operator=(const SimplicialComplex& other);
  SimplicialComplex(SimplicialComplex&& other) noexcept;
  SimplicialComplex& operator=(SimplicialComplex&& other) noexcept;
  ~SimplicialComplex() = default;
};

// Order complex of a finite poset given by its strict comparability: vertices
// 0..count-1, simplices = chains. Facets are the maximal chains.
SimplicialComplex order_complex(
    std::size_t count, const std::function<bool(int, int)>& strictly_less,
    std::vector<std::string> labels = {});

}  // namespace forestlab

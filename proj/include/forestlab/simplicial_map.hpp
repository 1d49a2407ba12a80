#pragma once

#include <string>
#include <vector>

#include "forestlab/simplicial.hpp"

namespace forestlab {

// A simplicial map given on vertices; entry -1 marks unused source slots.
struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> vertex_map;  // indexed by source vertex id

  std::string serialize() const;
  static SimplicialMap parse(const std::string& json_text);
};

struct MapCheck {
  bool valid = true;
  std::string violation;
};
// Every present source vertex maps to a present target vertex and images of
// simplices (deduplicated) are simplices.
MapCheck validate_map(const SimplicialMap& map);
Simplex map_simplex(const SimplicialMap& map, const Simplex& s);

struct JoinReport {
  bool vertex_surjective = true;
  bool simplexwise_injective = true;
  // Over each target simplex, the simplices mapping onto it are exactly the
  // selections of one source vertex per target vertex from per-corner fibers.
  bool join_condition = true;
  // The per-corner fibers over every target simplex are the full vertex
  // fibers, independent of the simplex.
  bool fibers_complete = true;
  std::string witness;
  bool is_join() const {
    return vertex_surjective && simplexwise_injective && join_condition;
  }
  bool is_complete_join() const { return is_join() && fibers_complete; }
};
JoinReport analyze_join(const SimplicialMap& map);
bool is_join_complex_map(const SimplicialMap& map);
bool is_complete_join_map(const SimplicialMap& map);

// For a complete join: picks the least-id preimage of each target vertex and
// returns the resulting embedding of the target into the source.
SimplicialMap section_of_complete_join(const SimplicialMap& map);

// Preimage-based connectivity transfer: if the preimage of every closed
// target simplex is n-connected, then source and target are n-connected
// together or not at all. The check reports hypothesis, both sides, and
// whether the transfer held.
struct FiberReport {
  bool hypothesis_holds = true;
  std::vector<Simplex> violations;  // target simplices with bad fibers
  bool source_connected = false;
  bool target_connected = false;
  bool transfer_holds = true;  // hypothesis => (source conn <=> target conn)
};
FiberReport quillen_fiber_check(const SimplicialMap& map, int n);

// Barycentric variant: the fiber over the barycenter of a k-simplex sigma is
// the order complex of the source simplices mapping exactly onto sigma; the
// hypothesis asks the target to be n-connected and each such fiber to be
// (n-k)-connected, and the conclusion is that the source is n-connected.
struct BarycentricFiberReport {
  bool target_connected = false;
  bool fibers_ok = true;
  std::vector<Simplex> violations;
  bool hypothesis_holds = false;
  bool source_connected = false;
  bool consistent = true;  // hypothesis => conclusion
};
BarycentricFiberReport barycentric_fiber_check(const SimplicialMap& map,
                                               int n);

}  // namespace forestlab

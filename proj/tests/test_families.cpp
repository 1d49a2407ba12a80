#include <string>
#include <vector>

#include "doctest.h"
#include "forestlab/families.hpp"
#include "forestlab/homology.hpp"
#include "forestlab/simplicial.hpp"

using namespace forestlab;

namespace {

HomologyGroup group_at(const HomologyProfile& profile, int dim) {
  for (const auto& g : profile) {
    if (g.dim == dim) return g;
  }
  return HomologyGroup{dim, 0, {}};
}

}  // namespace

TEST_CASE("vertex sets are lexicographic") {
  const auto sets = hypergraph_vertex_sets(4, 2);
  CHECK(sets == std::vector<std::vector<int>>{
                    {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(hypergraph_vertex_sets(3, 3) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(hypergraph_vertex_sets(2, 3).empty());
}

TEST_CASE("expected weak Cohen-Macaulay dimensions") {
  CHECK(hypergraph_wcm_dimension(4, 2) == 0);
  CHECK(hypergraph_wcm_dimension(5, 2) == 1);
  CHECK(hypergraph_wcm_dimension(10, 2) == 2);
  CHECK(hypergraph_wcm_dimension(9, 3) == 1);
  CHECK(hypergraph_wcm_dimension(14, 3) == 2);
}

TEST_CASE("small disjointness complexes") {
  SUBCASE("n=4, d=2: three isolated edges") {
    const auto cx = hypergraph_complex(4, 2);
    CHECK(cx.vertex_count() == 6);
    CHECK(cx.labels()[0] == "{1,2}");
    CHECK(cx.labels()[5] == "{3,4}");
    CHECK(cx.facets() ==
          std::vector<Simplex>{{0, 5}, {1, 4}, {2, 3}});
    const auto profile = reduced_homology(cx);
    CHECK(group_at(profile, 0) == HomologyGroup{0, 2, {}});
    CHECK(is_wcm(cx, hypergraph_wcm_dimension(4, 2)));
  }
  SUBCASE("n=3, d=2: three isolated vertices") {
    const auto cx = hypergraph_complex(3, 2);
    CHECK(cx.vertex_count() == 3);
    CHECK(cx.dim() == 0);
    CHECK(group_at(reduced_homology(cx), 0).rank == 2);
  }
  SUBCASE("n=d: a single point") {
    const auto cx = hypergraph_complex(2, 2);
    CHECK(cx.vertex_count() == 1);
    CHECK(homological_connectivity(cx) == kAcyclicSentinel);
  }
}

TEST_CASE("n=5, d=2 is the Petersen graph") {
  const auto cx = hypergraph_complex(5, 2);
  CHECK(cx.f_vector() == std::vector<std::size_t>{10, 15});
  CHECK(cx.is_flag());
  const auto profile = reduced_homology(cx);
  CHECK(group_at(profile, 0).trivial());
  CHECK(group_at(profile, 1) == HomologyGroup{1, 6, {}});
  CHECK(homological_connectivity(cx) == 0);
  CHECK(is_wcm(cx, 1));
  CHECK_FALSE(is_wcm(cx, 2));
  // Vertex links are three isolated vertices.
  const auto lk = cx.link({0});
  CHECK(lk.f_vector() == std::vector<std::size_t>{3});
}

TEST_CASE("n=6, d=2 homology") {
  const auto cx = hypergraph_complex(6, 2);
  CHECK(cx.f_vector() == std::vector<std::size_t>{15, 45, 15});
  CHECK(cx.is_flag());
  const auto profile = reduced_homology(cx);
  CHECK(group_at(profile, 0).trivial());
  CHECK(group_at(profile, 1) == HomologyGroup{1, 16, {}});
  CHECK(group_at(profile, 2).trivial());
  CHECK(euler_matches_homology(cx, profile));
}

TEST_CASE("n=7, d=2 has three-torsion") {
  const auto cx = hypergraph_complex(7, 2);
  CHECK(cx.f_vector() == std::vector<std::size_t>{21, 105, 105});
  const auto profile = reduced_homology(cx);
  CHECK(group_at(profile, 0).trivial());
  const auto h1 = group_at(profile, 1);
  CHECK(h1.rank == 0);
  CHECK(h1.torsion == std::vector<BigInt>{3});
  CHECK(group_at(profile, 2) == HomologyGroup{2, 20, {}});
  // Torsion in degree 1 caps the connectivity at 0.
  CHECK(homological_connectivity(cx) == 0);
  CHECK(is_wcm(cx, 1));
}

TEST_CASE("larger f-vectors match the closed form") {
  CHECK(hypergraph_complex(8, 2).f_vector() ==
        std::vector<std::size_t>{28, 210, 420, 105});
  CHECK(hypergraph_complex(10, 2).f_vector() ==
        std::vector<std::size_t>{45, 630, 3150, 4725, 945});
  CHECK(hypergraph_complex(9, 3).f_vector() ==
        std::vector<std::size_t>{84, 840, 280});
  CHECK(hypergraph_complex(9, 3).is_flag());
}

TEST_CASE("pair complexes over two edges") {
  const auto h = SimplicialComplex::from_facets({{0, 1}}, {"a", "b"});
  const auto b = SimplicialComplex::from_facets({{0, 1}}, {"x", "y"});

  SUBCASE("injective mode gives two disjoint edges") {
    const auto cx = pair_complex(h, b, PairMode::injective);
    CHECK(cx.vertex_count() == 4);
    CHECK(cx.labels()[0] == "(a|x)");
    CHECK(cx.labels()[3] == "(b|y)");
    CHECK(cx.facets() == std::vector<Simplex>{{0, 3}, {1, 2}});
    CHECK(group_at(reduced_homology(cx), 0).rank == 1);
  }
  SUBCASE("extended mode gives a four-cycle") {
    const auto cx = pair_complex(h, b, PairMode::extended);
    CHECK(cx.f_vector() == std::vector<std::size_t>{4, 4});
    const auto profile = reduced_homology(cx);
    CHECK(group_at(profile, 0).trivial());
    CHECK(group_at(profile, 1) == HomologyGroup{1, 1, {}});
  }
}

TEST_CASE("pair complex dimensions") {
  const auto h = SimplicialComplex::from_facets({{0, 1, 2}});
  const auto b = SimplicialComplex::from_facets({{0, 1}});
  // Injective pairs run out of distinct second coordinates at dimension 1.
  CHECK(pair_complex(h, b, PairMode::injective).dim() == 1);
  // Extended pairs may reuse them and reach the first factor's dimension.
  CHECK(pair_complex(h, b, PairMode::extended).dim() == 2);

  const int id = pair_vertex_id(2, 1, b);
  CHECK(pair_vertex_split(id, b) == std::pair<int, int>{2, 1});
}

TEST_CASE("pair complex respects factor structure") {
  // First factor misses the edge {0,2}: no pair simplex may project onto it.
  const auto h = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  const auto b = SimplicialComplex::from_facets({{0}, {1}});
  const auto cx = pair_complex(h, b, PairMode::injective);
  for (const auto& f : cx.facets()) {
    Simplex hs;
    for (int v : f) hs.push_back(pair_vertex_split(v, b).first);
    CHECK(h.contains(make_simplex(hs)));
  }
  // Second factor is discrete, so no simplex may repeat or join b-vertices:
  // every facet has distinct b-coordinates in injective mode and a single
  // b-coordinate class never forms an edge in extended mode.
  const auto ext = pair_complex(h, b, PairMode::extended);
  for (const auto& f : ext.facets()) {
    Simplex bs;
    for (int v : f) bs.push_back(pair_vertex_split(v, b).second);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    CHECK(b.contains(bs));
  }
}

TEST_CASE("nerve of a covered hexagon") {
  const auto hexagon = SimplicialComplex::from_facets(
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto arc = [&](std::vector<Simplex> facets) {
    return SimplicialComplex::from_facets(std::move(facets),
                                          hexagon.labels());
  };
  const std::vector<SimplicialComplex> members = {
      arc({{0, 1}, {1, 2}}), arc({{2, 3}, {3, 4}}), arc({{4, 5}, {0, 5}})};
  const auto nerve = nerve_complex(members);
  CHECK(nerve.labels() ==
        std::vector<std::string>{"member0", "member1", "member2"});
  CHECK(nerve.facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  // The nerve has the homology of the hexagon itself.
  const auto pn = reduced_homology(nerve);
  const auto ph = reduced_homology(hexagon);
  CHECK(group_at(pn, 0) == group_at(ph, 0));
  CHECK(group_at(pn, 1) == group_at(ph, 1));
}

TEST_CASE("nerve edge cases") {
  const auto a = SimplicialComplex::from_facets({{0, 1}});
  const auto empty = SimplicialComplex();
  SUBCASE("single member") {
    const auto nerve = nerve_complex({a});
    CHECK(nerve.facets() == std::vector<Simplex>{{0}});
  }
  SUBCASE("empty member contributes no vertex") {
    const auto nerve = nerve_complex({a, empty});
    CHECK(nerve.facets() == std::vector<Simplex>{{0}});
    CHECK(nerve.vertex_slots() == 2);
  }
  SUBCASE("disjoint members never meet") {
    const auto b = SimplicialComplex::from_facets({{2, 3}});
    const auto nerve = nerve_complex({a, b});
    CHECK(nerve.facets() == std::vector<Simplex>{{0}, {1}});
  }
  SUBCASE("three members meeting pairwise and globally") {
    const auto x = SimplicialComplex::from_facets({{0, 1}});
    const auto y = SimplicialComplex::from_facets({{0, 2}});
    const auto z = SimplicialComplex::from_facets({{0, 3}});
    const auto nerve = nerve_complex({x, y, z});
    CHECK(nerve.facets() == std::vector<Simplex>{{0, 1, 2}});
  }
}

TEST_CASE("survey table") {
  const auto rows = hypergraph_table(6, 2, 2);
  REQUIRE(rows.size() == 5);
  const auto csv = hypergraph_table_csv(rows);
  CHECK(csv.find("n,d,vertices,facets,flag,wcm_dim,wcm_ok,connectivity\n") ==
        0);
  CHECK(csv.find("2,2,1,1,true,0,true,acyclic\n") != std::string::npos);
  CHECK(csv.find("5,2,10,15,true,1,true,0\n") != std::string::npos);
  CHECK(csv.find("6,2,15,15,true,1,true,0\n") != std::string::npos);
  // Single-threaded run agrees.
  const auto rows1 = hypergraph_table(6, 2, 1);
  CHECK(hypergraph_table_csv(rows1) == csv);
}

#include "forestlab/families.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "forestlab/homology.hpp"

namespace forestlab {

std::vector<std::vector<int>> hypergraph_vertex_sets(int n, int d) {
  if (d < 1 || n < 0) throw std::invalid_argument("bad hypergraph parameters");
  std::vector<std::vector<int>> out;
  if (n < d) return out;
  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(pick);
    int i = d - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

int hypergraph_wcm_dimension(int n, int d) { return (n - d) / (d + 1); }

SimplicialComplex hypergraph_complex(int n, int d) {
  const std::vector<std::vector<int>> sets = hypergraph_vertex_sets(n, d);
  const int count = static_cast<int>(sets.size());
  std::vector<std::string> labels(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string text = "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      if (j) text += ",";
      text += std::to_string(sets[i][j]);
    }
    text += "}";
    labels[i] = text;
  }
  // Maximal simplices = maximal sets of pairwise disjoint subsets; greedy DFS
  // over vertices in id order with a taken-elements mask.
  std::vector<Simplex> facets;
  std::vector<int> current;
  std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int)> grow = [&](int from) {
    bool extended = false;
    for (int v = from; v < count; ++v) {
      bool fits = true;
      for (int e : sets[static_cast<std::size_t>(v)]) {
        if (taken[static_cast<std::size_t>(e)]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      // Maximality pruning: also ensure no earlier vertex still fits, else a
      // superset facet will be produced elsewhere.
      extended = true;
      for (int e : sets[static_cast<std::size_t>(v)]) {
        taken[static_cast<std::size_t>(e)] = 1;
      }
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
      for (int e : sets[static_cast<std::size_t>(v)]) {
        taken[static_cast<std::size_t>(e)] = 0;
      }
    }
    if (!extended && !current.empty()) {
      bool maximal = true;
      for (int v = 0; v < count && maximal; ++v) {
        bool fits = true;
        for (int e : sets[static_cast<std::size_t>(v)]) {
          if (taken[static_cast<std::size_t>(e)]) {
            fits = false;
            break;
          }
        }
        if (fits) maximal = false;
      }
      if (maximal) facets.push_back(current);
    }
  };
  grow(0);
  return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

int pair_vertex_id(int h, int b, const SimplicialComplex& bpart) {
  return h * bpart.vertex_slots() + b;
}

std::pair<int, int> pair_vertex_split(int id, const SimplicialComplex& bpart) {
  const int slots = bpart.vertex_slots();
  return {id / slots, id % slots};
}

SimplicialComplex pair_complex(const SimplicialComplex& hpart,
                               const SimplicialComplex& bpart, PairMode mode) {
  const int bslots = bpart.vertex_slots();
  std::vector<std::string> labels(
      static_cast<std::size_t>(hpart.vertex_slots()) *
      static_cast<std::size_t>(std::max(bslots, 0)));
  for (int h = 0; h < hpart.vertex_slots(); ++h) {
    for (int b = 0; b < bslots; ++b) {
      labels[static_cast<std::size_t>(pair_vertex_id(h, b, bpart))] =
          "(" + hpart.labels()[static_cast<std::size_t>(h)] + "|" +
          bpart.labels()[static_cast<std::size_t>(b)] + ")";
    }
  }
  std::vector<std::pair<int, int>> verts;
  for (int h : hpart.vertex_ids()) {
    for (int b : bpart.vertex_ids()) verts.emplace_back(h, b);
  }
  std::sort(verts.begin(), verts.end(),
            [&](const auto& a, const auto& b) {
              return pair_vertex_id(a.first, a.second, bpart) <
                     pair_vertex_id(b.first, b.second, bpart);
            });

  std::vector<Simplex> found;
  std::vector<int> current;
  Simplex hset, bset;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!current.empty()) found.push_back(make_simplex(current));
    for (std::size_t i = from; i < verts.size(); ++i) {
      const auto [h, b] = verts[i];
      if (std::binary_search(hset.begin(), hset.end(), h)) continue;
      const bool b_used = std::binary_search(bset.begin(), bset.end(), b);
      if (mode == PairMode::injective && b_used) continue;
      Simplex h2 = simplex_union(hset, {h});
      if (!hpart.contains(h2)) continue;
      Simplex b2 = b_used ? bset : simplex_union(bset, {b});
      if (!b_used && !bpart.contains(b2)) continue;
      current.push_back(pair_vertex_id(h, b, bpart));
      std::swap(hset, h2);
      Simplex bsave = bset;
      bset = b2;
      grow(i + 1);
      bset = std::move(bsave);
      std::swap(hset, h2);
      current.pop_back();
    }
  };
  grow(0);
  if (found.empty()) {
    return SimplicialComplex::from_facets({}, std::move(labels));
  }
  return SimplicialComplex::from_facets(std::move(found), std::move(labels));
}

SimplicialComplex nerve_complex(
    const std::vector<SimplicialComplex>& members) {
  const std::size_t m = members.size();
  std::vector<std::vector<int>> vsets(m);
  for (std::size_t j = 0; j < m; ++j) vsets[j] = members[j].vertex_ids();
  std::vector<Simplex> found;
  std::vector<int> current;
  std::function<void(std::size_t, std::vector<int>)> grow =
      [&](std::size_t from, std::vector<int> common) {
        if (!current.empty()) found.push_back(make_simplex(current));
        for (std::size_t j = from; j < m; ++j) {
          std::vector<int> next;
          std::set_intersection(common.begin(), common.end(),
                                vsets[j].begin(), vsets[j].end(),
                                std::back_inserter(next));
          if (next.empty()) continue;
          current.push_back(static_cast<int>(j));
          grow(j + 1, std::move(next));
          current.pop_back();
        }
      };
  // Seed with each member's own vertex set.
  for (std::size_t j = 0; j < m; ++j) {
    if (vsets[j].empty()) continue;
    current.push_back(static_cast<int>(j));
    grow(j + 1, vsets[j]);
    current.pop_back();
    found.push_back(Simplex{static_cast<int>(j)});
  }
  std::vector<std::string> labels(m);
  for (std::size_t j = 0; j < m; ++j) labels[j] = "member" + std::to_string(j);
  return SimplicialComplex::from_facets(std::move(found), std::move(labels));
}

std::vector<HypergraphTableRow> hypergraph_table(int nmax, int dmax,
                                                 int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<std::pair<int, int>> cells;  // (d, n)
  for (int d = 2; d <= dmax; ++d) {
    for (int n = d; n <= nmax; ++n) cells.emplace_back(d, n);
  }
  std::vector<HypergraphTableRow> rows(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) break;
      const auto [d, n] = cells[i];
      HypergraphTableRow row;
      row.n = n;
      row.d = d;
      const SimplicialComplex cx = hypergraph_complex(n, d);
      row.vertex_count = cx.vertex_count();
      row.facet_count = cx.facets().size();
      row.flag = cx.is_flag();
      row.wcm_dim = hypergraph_wcm_dimension(n, d);
      row.wcm_ok = is_wcm(cx, row.wcm_dim);
      row.connectivity = homological_connectivity(cx);
      rows[i] = row;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string hypergraph_table_csv(const std::vector<HypergraphTableRow>& rows) {
  std::ostringstream out;
  out << "n,d,vertices,facets,flag,wcm_dim,wcm_ok,connectivity\n";
  for (const HypergraphTableRow& r : rows) {
    out << r.n << ',' << r.d << ',' << r.vertex_count << ',' << r.facet_count
        << ',' << (r.flag ? "true" : "false") << ',' << r.wcm_dim << ','
        << (r.wcm_ok ? "true" : "false") << ',';
    if (r.connectivity == kAcyclicSentinel) {
      out << "acyclic";
    } else {
      out << r.connectivity;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace forestlab

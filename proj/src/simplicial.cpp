#include "forestlab/simplicial.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace forestlab {

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Drops duplicates and non-maximal entries, returns sorted facet list.
std::vector<Simplex> maximalize(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  std::vector<Simplex> out;
  for (const Simplex& s : simplices) {
    if (s.empty()) continue;
    bool dominated = false;
    for (const Simplex& kept : out) {
      if (simplex_subset(s, kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Simplex make_simplex(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("simplex has a repeated vertex");
  }
  return vertices;
}

bool simplex_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool simplices_disjoint(const Simplex& a, const Simplex& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return true;
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : labels_(other.labels_), facets_(other.facets_), present_(other.present_) {}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
  if (this != &other) {
    labels_ = other.labels_;
    facets_ = other.facets_;
    present_ = other.present_;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    face_cache_.clear();
  }
  return *this;
}

SimplicialComplex::SimplicialComplex(SimplicialComplex&& other) noexcept
    : labels_(std::move(other.labels_)),
      facets_(std::move(other.facets_)),
      present_(std::move(other.present_)),
      face_cache_(std::move(other.face_cache_)) {}

SimplicialComplex& SimplicialComplex::operator=(
    SimplicialComplex&& other) noexcept {
  if (this != &other) {
    labels_ = std::move(other.labels_);
    facets_ = std::move(other.facets_);
    present_ = std::move(other.present_);
    face_cache_ = std::move(other.face_cache_);
  }
  return *this;
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<Simplex> facets, std::vector<std::string> labels) {
  int max_id = -1;
  for (Simplex& f : facets) {
    f = make_simplex(std::move(f));
    for (int v : f) {
      if (v < 0) throw std::invalid_argument("negative vertex id");
      max_id = std::max(max_id, v);
    }
  }
  SimplicialComplex cx;
  cx.facets_ = maximalize(std::move(facets));
  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(max_id + 1));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      labels[i] = std::to_string(i);
    }
  } else if (static_cast<int>(labels.size()) <= max_id) {
    throw std::invalid_argument("label list shorter than vertex id range");
  }
  cx.labels_ = std::move(labels);
  cx.present_.assign(cx.labels_.size(), 0);
  for (const Simplex& f : cx.facets_) {
    for (int v : f) cx.present_[static_cast<std::size_t>(v)] = 1;
  }
  return cx;
}

bool SimplicialComplex::has_vertex(int v) const {
  return v >= 0 && v < vertex_slots() &&
         present_[static_cast<std::size_t>(v)] != 0;
}

std::vector<int> SimplicialComplex::vertex_ids() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_slots(); ++v) {
    if (present_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::size_t SimplicialComplex::vertex_count() const {
  std::size_t n = 0;
  for (char p : present_) n += (p != 0);
  return n;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Simplex& f : facets_) {
    d = std::max(d, static_cast<int>(f.size()) - 1);
  }
  return d;
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = face_cache_.find(dim);
  if (it != face_cache_.end()) return it->second;

  std::set<Simplex> found;
  if (dim >= 0) {
    const std::size_t want = static_cast<std::size_t>(dim) + 1;
    for (const Simplex& f : facets_) {
      if (f.size() < want) continue;
      // Enumerate all subsets of size `want` via a selection mask.
      std::vector<int> pick(want);
      std::vector<std::size_t> idx(want);
      for (std::size_t i = 0; i < want; ++i) idx[i] = i;
      while (true) {
        for (std::size_t i = 0; i < want; ++i) pick[i] = f[idx[i]];
        found.insert(pick);
        // Advance the combination.
        std::size_t i = want;
        while (i > 0) {
          --i;
          if (idx[i] != i + f.size() - want) break;
          if (i == 0) {
            i = want;  // signal exhaustion
            break;
          }
        }
        if (i == want) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  auto& slot = face_cache_[dim];
  slot.assign(found.begin(), found.end());
  return slot;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d) {
    const auto& fs = faces(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dim(); ++d) out.push_back(faces(d).size());
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (std::size_t c : f_vector()) n += c;
  return n;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  long long sign = 1;
  for (std::size_t c : f_vector()) {
    chi += sign * static_cast<long long>(c);
    sign = -sign;
  }
  return chi;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return !is_empty();
  for (const Simplex& f : facets_) {
    if (simplex_subset(s, f)) return true;
  }
  return false;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
  if (!contains(s)) throw std::invalid_argument("link of a non-simplex");
  std::vector<Simplex> parts;
  for (const Simplex& f : facets_) {
    if (simplex_subset(s, f)) parts.push_back(simplex_difference(f, s));
  }
  return from_facets(maximalize(std::move(parts)), labels_);
}

SimplicialComplex SimplicialComplex::star(const Simplex& s) const {
  if (!contains(s)) throw std::invalid_argument("star of a non-simplex");
  std::vector<Simplex> parts;
  for (const Simplex& f : facets_) {
    if (simplex_subset(s, f)) parts.push_back(f);
  }
  return from_facets(std::move(parts), labels_);
}

SimplicialComplex SimplicialComplex::full_subcomplex(
    const std::vector<int>& vertices) const {
  std::vector<char> keep(labels_.size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= vertex_slots()) {
      throw std::invalid_argument("full_subcomplex vertex out of range");
    }
    keep[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Simplex> parts;
  for (const Simplex& f : facets_) {
    Simplex cut;
    for (int v : f) {
      if (keep[static_cast<std::size_t>(v)]) cut.push_back(v);
    }
    if (!cut.empty()) parts.push_back(cut);
  }
  return from_facets(maximalize(std::move(parts)), labels_);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
  const int offset = a.vertex_slots();
  std::vector<std::string> labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  std::vector<Simplex> facets;
  auto shifted = [offset](const Simplex& f) {
    Simplex out = f;
    for (int& v : out) v += offset;
    return out;
  };
  if (a.is_empty()) {
    for (const Simplex& fb : b.facets_) facets.push_back(shifted(fb));
  } else if (b.is_empty()) {
    facets = a.facets_;
  } else {
    for (const Simplex& fa : a.facets_) {
      for (const Simplex& fb : b.facets_) {
        facets.push_back(simplex_union(fa, shifted(fb)));
      }
    }
  }
  return from_facets(std::move(facets), std::move(labels));
}

namespace {

// Bron-Kerbosch with pivoting; adjacency as per-vertex sorted vectors.
void bron_kerbosch(std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   const std::vector<std::vector<int>>& adj,
                   std::vector<Simplex>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(make_simplex(R));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto& cand : {P, X}) {
    for (int u : cand) {
      std::size_t deg = 0;
      for (int v : P) {
        if (std::binary_search(adj[u].begin(), adj[u].end(), v)) ++deg;
      }
      if (pivot < 0 || deg > best) {
        pivot = u;
        best = deg;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : P) {
    if (pivot < 0 ||
        !std::binary_search(adj[pivot].begin(), adj[pivot].end(), v)) {
      candidates.push_back(v);
    }
  }
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P) {
      if (std::binary_search(adj[v].begin(), adj[v].end(), w)) P2.push_back(w);
    }
    for (int w : X) {
      if (std::binary_search(adj[v].begin(), adj[v].end(), w)) X2.push_back(w);
    }
    R.push_back(v);
    bron_kerbosch(R, std::move(P2), std::move(X2), adj, out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::clique_complex() const {
  std::vector<std::vector<int>> adj(labels_.size());
  for (const Simplex& e : faces(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  std::vector<int> R;
  std::vector<Simplex> cliques;
  bron_kerbosch(R, vertex_ids(), {}, adj, cliques);
  return from_facets(std::move(cliques), labels_);
}

SimplicialComplex::FlagReport SimplicialComplex::flag_report() const {
  FlagReport report;
  std::unordered_set<Simplex, SimplexHash> face_set;
  for (const Simplex& f : all_faces()) face_set.insert(f);
  std::vector<std::vector<char>> adj(
      labels_.size(), std::vector<char>(labels_.size(), 0));
  for (const Simplex& e : faces(1)) {
    adj[e[0]][e[1]] = 1;
    adj[e[1]][e[0]] = 1;
  }
  // A complex is flag iff every simplex extends by each later vertex adjacent
  // to all of it; induction over clique size makes this check sufficient.
  for (int d = 1; d <= dim(); ++d) {
    for (const Simplex& s : faces(d)) {
      for (int v = s.back() + 1; v < vertex_slots(); ++v) {
        if (!has_vertex(v)) continue;
        bool all_adjacent = true;
        for (int u : s) {
          if (!adj[u][v]) {
            all_adjacent = false;
            break;
          }
        }
        if (!all_adjacent) continue;
        Simplex bigger = s;
        bigger.push_back(v);
        if (!face_set.count(bigger)) {
          report.flag = false;
          report.witness = bigger;
          return report;
        }
      }
    }
  }
  return report;
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
  const std::vector<Simplex> cells = all_faces();
  std::map<Simplex, int> index;
  std::vector<std::string> labels(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    index[cells[i]] = static_cast<int>(i);
    std::string text = "{";
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j) text += ",";
      text += std::to_string(cells[i][j]);
    }
    text += "}";
    labels[i] = text;
  }
  std::vector<Simplex> chains;
  // Maximal chains of the face poset = descending subset chains from facets.
  std::function<void(const Simplex&, std::vector<int>&)> descend =
      [&](const Simplex& cell, std::vector<int>& chain) {
        chain.push_back(index.at(cell));
        if (cell.size() == 1) {
          chains.push_back(make_simplex(chain));
        } else {
          for (std::size_t drop = 0; drop < cell.size(); ++drop) {
            Simplex sub;
            for (std::size_t i = 0; i < cell.size(); ++i) {
              if (i != drop) sub.push_back(cell[i]);
            }
            descend(sub, chain);
          }
        }
        chain.pop_back();
      };
  std::vector<int> chain;
  for (const Simplex& f : facets_) descend(f, chain);
  return from_facets(std::move(chains), std::move(labels));
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return labels_ == other.labels_ && facets_ == other.facets_;
}

std::string SimplicialComplex::serialize() const {
  nlohmann::ordered_json j;
  j["vertices"] = labels_;
  j["facets"] = facets_;
  return j.dump();
}

SimplicialComplex SimplicialComplex::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets")) {
    throw std::invalid_argument("complex JSON needs vertices and facets");
  }
  std::vector<std::string> labels =
      j["vertices"].get<std::vector<std::string>>();
  std::vector<Simplex> facets = j["facets"].get<std::vector<Simplex>>();
  return from_facets(std::move(facets), std::move(labels));
}

SimplicialComplex order_complex(
    std::size_t count, const std::function<bool(int, int)>& strictly_less,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(count);
  std::vector<std::vector<char>> less(count, std::vector<char>(count, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && strictly_less(a, b)) less[a][b] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (less[a][b] && less[b][a]) {
        throw std::invalid_argument("order_complex relation is not acyclic");
      }
    }
  }
  // Covering relations: b covers a iff a < b with nothing strictly between.
  std::vector<std::vector<int>> covers(count);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < n; ++c) {
        if (less[a][c] && less[c][b]) {
          direct = false;
          break;
        }
      }
      if (direct) covers[a].push_back(b);
    }
  }
  std::vector<Simplex> chains;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int e) {
    chain.push_back(e);
    if (covers[e].empty()) {
      chains.push_back(make_simplex(chain));
    } else {
      for (int nxt : covers[e]) extend(nxt);
    }
    chain.pop_back();
  };
  for (int e = 0; e < n; ++e) {
    bool minimal = true;
    for (int a = 0; a < n; ++a) {
      if (less[a][e]) {
        minimal = false;
        break;
      }
    }
    if (minimal) extend(e);
  }
  if (labels.empty() && count > 0) {
    labels.resize(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = std::to_string(i);
  }
  if (count == 0) return SimplicialComplex();
  return SimplicialComplex::from_facets(std::move(chains), std::move(labels));
}

}  // namespace forestlab

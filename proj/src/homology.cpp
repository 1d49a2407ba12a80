#include "forestlab/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace forestlab {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct SimplexKeyHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Textbook dense Smith elimination; returns absolute diagonal entries.
std::vector<BigInt> dense_snf_diagonal(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  if (m.empty() || m[0].empty()) return diag;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (pr == rows || abs(m[i][j]) < abs(m[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;  // submatrix is zero
      std::swap(m[t], m[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

      bool leftovers = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) leftovers = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) leftovers = true;
      }
      if (leftovers) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

// Pairwise gcd/lcm sweeps until the chain d1 | d2 | ... stabilizes.
void normalize_factors(std::vector<BigInt>& diag) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        const BigInt g = gcd(diag[i], diag[j]);
        const BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
    }
  }
  std::sort(diag.begin(), diag.end());
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& cx, int d) {
  SparseMatrix m;
  if (d < -1) throw std::invalid_argument("boundary degree below -1");
  if (d == -1) {
    m.rows = 0;
    m.cols.resize(1);
    return m;
  }
  if (d == 0) {
    m.rows = 1;
    m.cols.resize(cx.faces(0).size());
    for (auto& col : m.cols) col[0] = 1;
    return m;
  }
  const auto& below = cx.faces(d - 1);
  const auto& here = cx.faces(d);
  std::unordered_map<Simplex, int, SimplexKeyHash> row_of;
  row_of.reserve(below.size());
  for (std::size_t i = 0; i < below.size(); ++i) {
    row_of[below[i]] = static_cast<int>(i);
  }
  m.rows = static_cast<int>(below.size());
  m.cols.resize(here.size());
  for (std::size_t c = 0; c < here.size(); ++c) {
    const Simplex& s = here[c];
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) face.push_back(s[i]);
      }
      m.cols[c][row_of.at(face)] = sign;
      sign = -sign;
    }
  }
  return m;
}

SmithSummary smith_summary(SparseMatrix matrix, bool want_torsion) {
  SmithSummary out;
  const std::size_t ncols = matrix.cols.size();
  std::vector<std::set<int>> row_cols(
      static_cast<std::size_t>(std::max(matrix.rows, 0)));
  std::vector<char> col_active(ncols, 1);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (auto it = matrix.cols[c].begin(); it != matrix.cols[c].end();) {
      if (it->second == 0) {
        it = matrix.cols[c].erase(it);
      } else {
        row_cols[static_cast<std::size_t>(it->first)].insert(
            static_cast<int>(c));
        ++it;
      }
    }
  }
  auto col_has_unit = [&](std::size_t c) {
    for (const auto& [r, v] : matrix.cols[c]) {
      if (v == 1 || v == -1) return true;
    }
    return false;
  };
  std::set<int> unit_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (col_has_unit(c)) unit_cols.insert(static_cast<int>(c));
  }

  // Phase 1: unimodular pivots; clearing the pivot row by column operations
  // and then deleting pivot row and column is exact for both rank and
  // invariant factors (the pivot contributes a factor of 1).
  while (!unit_cols.empty()) {
    std::size_t pivot_col = 0;
    std::size_t best_nnz = 0;
    bool first = true;
    for (int c : unit_cols) {
      const std::size_t nnz = matrix.cols[static_cast<std::size_t>(c)].size();
      if (first || nnz < best_nnz) {
        pivot_col = static_cast<std::size_t>(c);
        best_nnz = nnz;
        first = false;
      }
    }
    int pivot_row = -1;
    std::size_t best_row_deg = 0;
    BigInt pivot_val = 0;
    for (const auto& [r, v] : matrix.cols[pivot_col]) {
      if (v != 1 && v != -1) continue;
      const std::size_t deg = row_cols[static_cast<std::size_t>(r)].size();
      if (pivot_row < 0 || deg < best_row_deg) {
        pivot_row = r;
        best_row_deg = deg;
        pivot_val = v;
      }
    }
    const std::vector<int> touched(
        row_cols[static_cast<std::size_t>(pivot_row)].begin(),
        row_cols[static_cast<std::size_t>(pivot_row)].end());
    for (int c2i : touched) {
      const std::size_t c2 = static_cast<std::size_t>(c2i);
      if (c2 == pivot_col) continue;
      const BigInt factor = matrix.cols[c2].at(pivot_row) / pivot_val;
      for (const auto& [r, v] : matrix.cols[pivot_col]) {
        auto it = matrix.cols[c2].find(r);
        if (it == matrix.cols[c2].end()) {
          const BigInt nv = -factor * v;
          if (nv != 0) {
            matrix.cols[c2][r] = nv;
            row_cols[static_cast<std::size_t>(r)].insert(c2i);
          }
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            matrix.cols[c2].erase(it);
            row_cols[static_cast<std::size_t>(r)].erase(c2i);
          }
        }
      }
      if (col_has_unit(c2)) {
        unit_cols.insert(c2i);
      } else {
        unit_cols.erase(c2i);
      }
    }
    for (const auto& [r, v] : matrix.cols[pivot_col]) {
      row_cols[static_cast<std::size_t>(r)].erase(
          static_cast<int>(pivot_col));
    }
    matrix.cols[pivot_col].clear();
    col_active[pivot_col] = 0;
    unit_cols.erase(static_cast<int>(pivot_col));
    ++out.rank;
  }

  // Phase 2: whatever remains has no unit entries; it is small in practice,
  // so hand it to the dense engine.
  std::set<int> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!col_active[c] || matrix.cols[c].empty()) continue;
    live_cols.push_back(c);
    for (const auto& [r, v] : matrix.cols[c]) live_rows.insert(r);
  }
  if (!live_cols.empty()) {
    std::unordered_map<int, std::size_t> row_index;
    std::size_t k = 0;
    for (int r : live_rows) row_index[r] = k++;
    std::vector<std::vector<BigInt>> dense(
        live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      for (const auto& [r, v] : matrix.cols[live_cols[j]]) {
        dense[row_index[r]][j] = v;
      }
    }
    std::vector<BigInt> diag = dense_snf_diagonal(std::move(dense));
    out.rank += diag.size();
    if (want_torsion) {
      normalize_factors(diag);
      for (const BigInt& d : diag) {
        if (d > 1) out.nontrivial_factors.push_back(d);
      }
    }
  }
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& cx) {
  HomologyProfile profile;
  if (cx.is_empty()) {
    profile.push_back({-1, 1, {}});
    return profile;
  }
  const int top = cx.dim();
  std::vector<SmithSummary> smith(static_cast<std::size_t>(top) + 2);
  for (int d = 0; d <= top; ++d) {
    smith[static_cast<std::size_t>(d)] =
        smith_summary(boundary_matrix(cx, d), true);
  }
  // The boundary out of degree top+1 is zero.
  auto face_count = [&](int d) -> long long {
    if (d == -1) return 1;
    return static_cast<long long>(cx.faces(d).size());
  };
  for (int d = -1; d <= top; ++d) {
    HomologyGroup g;
    g.dim = d;
    const long long rank_in =
        d >= 0 ? static_cast<long long>(smith[static_cast<std::size_t>(d)].rank)
               : 0;
    const long long rank_out =
        d + 1 <= top
            ? static_cast<long long>(smith[static_cast<std::size_t>(d + 1)].rank)
            : 0;
    g.rank = face_count(d) - rank_in - rank_out;
    if (d + 1 <= top) {
      g.torsion = smith[static_cast<std::size_t>(d + 1)].nontrivial_factors;
    }
    profile.push_back(std::move(g));
  }
  return profile;
}

std::string homology_to_json(const HomologyProfile& profile) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const HomologyGroup& g : profile) {
    nlohmann::ordered_json item;
    item["dim"] = g.dim;
    item["rank"] = g.rank;
    nlohmann::ordered_json tor = nlohmann::ordered_json::array();
    for (const BigInt& t : g.torsion) {
      if (t <= BigInt(std::numeric_limits<long long>::max())) {
        tor.push_back(t.convert_to<long long>());
      } else {
        tor.push_back(t.str());
      }
    }
    item["torsion"] = tor;
    arr.push_back(item);
  }
  return arr.dump();
}

HomologyProfile homology_from_json(const std::string& json_text) {
  nlohmann::json arr = nlohmann::json::parse(json_text);
  if (!arr.is_array()) throw std::invalid_argument("homology JSON not a list");
  HomologyProfile profile;
  for (const auto& item : arr) {
    HomologyGroup g;
    g.dim = item.at("dim").get<int>();
    g.rank = item.at("rank").get<long long>();
    for (const auto& t : item.at("torsion")) {
      if (t.is_string()) {
        g.torsion.emplace_back(t.get<std::string>());
      } else {
        g.torsion.emplace_back(t.get<long long>());
      }
    }
    profile.push_back(std::move(g));
  }
  return profile;
}

namespace {

// Shared loop for connectivity queries: finds the first degree with
// nonvanishing reduced homology, scanning degrees <= cap (cap < 0 means no
// cap). Returns the connectivity value.
int connectivity_scan(const SimplicialComplex& cx, int cap, bool capped) {
  if (cx.is_empty()) return -2;
  const int top = cx.dim();
  SmithSummary current = smith_summary(boundary_matrix(cx, 0), true);
  for (int d = 0; d <= top; ++d) {
    if (capped && d > cap) return cap;  // vanishing verified through cap
    SmithSummary next;
    if (d + 1 <= top) {
      next = smith_summary(boundary_matrix(cx, d + 1), true);
    }
    const long long betti = static_cast<long long>(cx.faces(d).size()) -
                            static_cast<long long>(current.rank) -
                            static_cast<long long>(next.rank);
    if (betti != 0 || !next.nontrivial_factors.empty()) return d - 1;
    current = std::move(next);
  }
  return kAcyclicSentinel;
}

}  // namespace

int homological_connectivity(const SimplicialComplex& cx) {
  return connectivity_scan(cx, 0, false);
}

bool is_homologically_connected(const SimplicialComplex& cx, int m) {
  if (m <= -2) return true;
  if (cx.is_empty()) return false;
  if (m == -1) return true;
  const int level = connectivity_scan(cx, m, true);
  return level == kAcyclicSentinel || level >= m;
}

WcmReport wcm_report(const SimplicialComplex& cx, int n) {
  WcmReport report;
  report.n = n;
  if (!is_homologically_connected(cx, n - 1)) {
    report.verdict = false;
    report.violations.push_back("complex is not " + std::to_string(n - 1) +
                                "-connected");
  }
  const int top = cx.dim();
  for (int p = 0; p <= std::min(top, n - 1); ++p) {
    const int required = n - p - 2;
    for (const Simplex& s : cx.faces(p)) {
      if (is_homologically_connected(cx.link(s), required)) continue;
      report.verdict = false;
      std::string text = "link of {";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(s[i]);
      }
      text += "} is not " + std::to_string(required) + "-connected";
      report.violations.push_back(std::move(text));
    }
  }
  return report;
}

bool is_wcm(const SimplicialComplex& cx, int n) {
  return wcm_report(cx, n).verdict;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;
using QMatrix = std::vector<std::vector<Rational>>;  // row-major

std::size_t q_rank(QMatrix m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Basis of the null space; each result vector has length = column count.
std::vector<std::vector<Rational>> q_kernel_basis(QMatrix m,
                                                  std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  if (!m.empty()) {
    const std::size_t rows = m.size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && m[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(m[rank], m[p]);
      const Rational inv = m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[rank][j] /= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || m[i][c] == 0) continue;
        const Rational f = m[i][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
      }
      pivot_col.push_back(c);
      ++rank;
    }
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Simplex> chain_basis(const SimplicialComplex& cx, int d) {
  if (d == -1) return {Simplex{}};
  if (d < -1 || d > cx.dim()) return {};
  return cx.faces(d);
}

QMatrix q_boundary(const SimplicialComplex& cx, int d) {
  const std::vector<Simplex> here = chain_basis(cx, d);
  const std::vector<Simplex> below = chain_basis(cx, d - 1);
  std::map<Simplex, std::size_t> row_of;
  for (std::size_t i = 0; i < below.size(); ++i) row_of[below[i]] = i;
  QMatrix m(below.size(), std::vector<Rational>(here.size(), 0));
  if (d < 0) return m;
  for (std::size_t c = 0; c < here.size(); ++c) {
    const Simplex& s = here[c];
    if (d == 0) {
      m[0][c] = 1;  // augmentation
      continue;
    }
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) face.push_back(s[i]);
      }
      m[row_of.at(face)][c] = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

std::vector<DegreeMapReport> inclusion_homology_maps(
    const SimplicialComplex& sub, const SimplicialComplex& whole,
    int max_degree) {
  for (const Simplex& f : sub.facets()) {
    if (!whole.contains(f)) {
      throw std::invalid_argument("inclusion: sub is not a subcomplex");
    }
  }
  std::vector<DegreeMapReport> reports;
  for (int d = -1; d <= max_degree; ++d) {
    DegreeMapReport rep;
    rep.degree = d;

    const std::vector<Simplex> basis_a = chain_basis(sub, d);
    const std::vector<Simplex> basis_x = chain_basis(whole, d);
    std::map<Simplex, std::size_t> index_x;
    for (std::size_t i = 0; i < basis_x.size(); ++i) index_x[basis_x[i]] = i;

    const QMatrix bd_a = q_boundary(sub, d);
    const std::vector<std::vector<Rational>> kernel_a =
        q_kernel_basis(bd_a, basis_a.size());
    const std::size_t b_a = q_rank(q_boundary(sub, d + 1));
    rep.rank_sub = static_cast<long long>(kernel_a.size()) -
                   static_cast<long long>(b_a);

    const QMatrix bd_x1 = q_boundary(whole, d + 1);
    const std::size_t b_x = q_rank(bd_x1);
    const std::size_t z_x = basis_x.size() - q_rank(q_boundary(whole, d));
    rep.rank_whole = static_cast<long long>(z_x) - static_cast<long long>(b_x);

    // Rows of `stacked` are the pushed-forward kernel vectors followed by
    // the columns of the next whole-complex boundary; its rank minus b_x is
    // the rank of the induced map on reduced homology.
    QMatrix stacked;
    for (const auto& k : kernel_a) {
      std::vector<Rational> row(basis_x.size(), 0);
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] != 0) row[index_x.at(basis_a[i])] = k[i];
      }
      stacked.push_back(std::move(row));
    }
    const std::size_t cols_x1 = bd_x1.empty() ? 0 : bd_x1[0].size();
    for (std::size_t c = 0; c < cols_x1; ++c) {
      std::vector<Rational> row(basis_x.size(), 0);
      for (std::size_t r = 0; r < bd_x1.size(); ++r) row[r] = bd_x1[r][c];
      stacked.push_back(std::move(row));
    }
    const std::size_t joint = q_rank(std::move(stacked));
    rep.rank_image =
        static_cast<long long>(joint) - static_cast<long long>(b_x);
    rep.injective = rep.rank_image == rep.rank_sub;
    rep.surjective = rep.rank_image == rep.rank_whole;
    reports.push_back(rep);
  }
  return reports;
}

InclusionConclusion inclusion_iso_through_epi(const SimplicialComplex& sub,
                                              const SimplicialComplex& whole,
                                              int m) {
  InclusionConclusion out;
  out.m = m;
  if (m < -2) return out;
  out.degrees = inclusion_homology_maps(sub, whole, m + 1);
  for (const DegreeMapReport& rep : out.degrees) {
    if (rep.degree <= m && !rep.iso()) {
      out.holds = false;
      out.violation = "degree " + std::to_string(rep.degree) + ": map is not " +
                      (rep.injective ? "surjective" : "injective");
      break;
    }
    if (rep.degree == m + 1 && !rep.surjective) {
      out.holds = false;
      out.violation =
          "degree " + std::to_string(rep.degree) + ": map is not surjective";
      break;
    }
  }
  return out;
}

bool euler_matches_homology(const SimplicialComplex& cx,
                            const HomologyProfile& profile) {
  long long reduced_sum = 0;
  for (const HomologyGroup& g : profile) {
    const bool even = g.dim % 2 == 0;
    reduced_sum += even ? g.rank : -g.rank;
  }
  return cx.euler_characteristic() - 1 == reduced_sum;
}

}  // namespace forestlab

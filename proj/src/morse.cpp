#include "forestlab/morse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace forestlab {

bool height_less(const HeightTuple& a, const HeightTuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

HeightCheck check_height(const SimplicialComplex& cx,
                         const HeightFunction& h) {
  HeightCheck out;
  if (h.arity < 1) {
    out.valid = false;
    out.violation = "height arity must be positive";
    return out;
  }
  for (int v : cx.vertex_ids()) {
    if (v >= static_cast<int>(h.values.size()) ||
        static_cast<int>(h.values[static_cast<std::size_t>(v)].size()) !=
            h.arity) {
      out.valid = false;
      out.violation = "vertex " + std::to_string(v) + " lacks a height tuple";
      return out;
    }
  }
  for (const Simplex& e : cx.faces(1)) {
    const HeightTuple& a = h.values[static_cast<std::size_t>(e[0])];
    const HeightTuple& b = h.values[static_cast<std::size_t>(e[1])];
    if (a == b) {
      out.valid = false;
      out.violation = "edge {" + std::to_string(e[0]) + "," +
                      std::to_string(e[1]) + "} has equal heights";
      return out;
    }
  }
  return out;
}

SimplicialComplex sublevel_complex(const SimplicialComplex& cx,
                                   const HeightFunction& h,
                                   const HeightTuple& t) {
  std::vector<int> keep;
  for (int v : cx.vertex_ids()) {
    const HeightTuple& hv = h.values[static_cast<std::size_t>(v)];
    if (!height_less(t, hv)) keep.push_back(v);  // hv <= t
  }
  return cx.full_subcomplex(keep);
}

SimplicialComplex morse_descending_link(const SimplicialComplex& cx,
                                        const HeightFunction& h, int v) {
  const SimplicialComplex lk = cx.link({v});
  const HeightTuple& hv = h.values[static_cast<std::size_t>(v)];
  std::vector<int> lower;
  for (int u : lk.vertex_ids()) {
    if (height_less(h.values[static_cast<std::size_t>(u)], hv)) {
      lower.push_back(u);
    }
  }
  return lk.full_subcomplex(lower);
}

MorseReport morse_lemma_verify(const SimplicialComplex& cx,
                               const HeightFunction& h, const HeightTuple& s,
                               int m) {
  const HeightCheck hc = check_height(cx, h);
  if (!hc.valid) throw std::invalid_argument(hc.violation);
  MorseReport report;
  for (int v : cx.vertex_ids()) {
    if (!height_less(s, h.values[static_cast<std::size_t>(v)])) continue;
    if (!is_homologically_connected(morse_descending_link(cx, h, v), m)) {
      report.hypothesis_holds = false;
      report.hypothesis_violations.push_back(v);
    }
  }
  report.conclusion = inclusion_iso_through_epi(sublevel_complex(cx, h, s),
                                                cx, m);
  report.conclusion_holds = report.conclusion.holds;
  report.consistent = !report.hypothesis_holds || report.conclusion_holds;
  return report;
}

BarCheck check_bar(const SimplicialComplex& cx, const BarOperator& op) {
  BarCheck out;
  auto describe = [](const Simplex& s) {
    std::string text = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) text += ",";
      text += std::to_string(s[i]);
    }
    return text + "}";
  };
  for (int d = 0; d <= cx.dim(); ++d) {
    for (const Simplex& s : cx.faces(d)) {
      const Simplex bar = op.bar(s);
      if (!simplex_subset(bar, s)) {
        out.valid = false;
        out.violation = "bar of " + describe(s) + " is not a face of it";
        return out;
      }
      if (!bar.empty()) {
        const Simplex bb = op.bar(bar);
        if (bb != bar) {
          out.valid = false;
          out.violation = "bar of " + describe(s) + " is not idempotent";
          return out;
        }
      }
      if (d >= 1) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face;
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != drop) face.push_back(s[i]);
          }
          if (!simplex_subset(op.bar(face), bar)) {
            out.valid = false;
            out.violation =
                "bar is not monotone on " + describe(face) + " inside " +
                describe(s);
            return out;
          }
        }
      }
    }
  }
  return out;
}

SimplicialComplex good_extension_link(const SimplicialComplex& cx,
                                      const BarOperator& op,
                                      const Simplex& s) {
  const Simplex bar_s = op.bar(s);
  const SimplicialComplex lk = cx.link(s);
  std::vector<Simplex> parts;
  for (int d = 0; d <= lk.dim(); ++d) {
    for (const Simplex& tau : lk.faces(d)) {
      if (op.bar(simplex_union(s, tau)) == bar_s) parts.push_back(tau);
    }
  }
  return SimplicialComplex::from_facets(std::move(parts), lk.labels());
}

BadSimplexReport bad_simplex_analyze(const SimplicialComplex& cx,
                                     const BarOperator& op, int m) {
  const BarCheck bc = check_bar(cx, op);
  if (!bc.valid) throw std::invalid_argument(bc.violation);
  BadSimplexReport report;
  std::vector<Simplex> good;
  for (int d = 0; d <= cx.dim(); ++d) {
    for (const Simplex& s : cx.faces(d)) {
      const Simplex bar = op.bar(s);
      if (bar.empty()) {
        good.push_back(s);
      } else if (bar == s) {
        report.bad_simplices.push_back(s);
      }
    }
  }
  report.good_subcomplex = SimplicialComplex::from_facets(
      good, std::vector<std::string>(cx.labels()));
  for (const Simplex& s : report.bad_simplices) {
    const int need = m - (static_cast<int>(s.size()) - 1);
    if (!is_homologically_connected(good_extension_link(cx, op, s), need)) {
      report.hypothesis_holds = false;
      report.hypothesis_violations.push_back(s);
    }
  }
  report.conclusion =
      inclusion_iso_through_epi(report.good_subcomplex, cx, m);
  report.conclusion_holds = report.conclusion.holds;
  report.consistent = !report.hypothesis_holds || report.conclusion_holds;
  return report;
}

BarOperator coloring_to_bar(const std::vector<int>& colors) {
  BarOperator op;
  op.bar = [colors](const Simplex& s) {
    std::map<int, int> count;
    for (int v : s) {
      ++count[colors.at(static_cast<std::size_t>(v))];
    }
    Simplex out;
    for (int v : s) {
      if (count[colors.at(static_cast<std::size_t>(v))] > 1) out.push_back(v);
    }
    return out;
  };
  return op;
}

BarOperator partition_to_bar(const std::vector<char>& good_vertex) {
  BarOperator op;
  op.bar = [good_vertex](const Simplex& s) {
    Simplex out;
    for (int v : s) {
      if (!good_vertex.at(static_cast<std::size_t>(v))) out.push_back(v);
    }
    return out;
  };
  return op;
}

}  // namespace forestlab

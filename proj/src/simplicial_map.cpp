#include "forestlab/simplicial_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "forestlab/homology.hpp"
#include "json.hpp"

namespace forestlab {

std::string SimplicialMap::serialize() const {
  nlohmann::ordered_json j;
  j["source"] = nlohmann::ordered_json::parse(source.serialize());
  j["target"] = nlohmann::ordered_json::parse(target.serialize());
  j["vertex_map"] = vertex_map;
  return j.dump();
}

SimplicialMap SimplicialMap::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("vertex_map")) {
    throw std::invalid_argument(
        "map JSON needs source, target and vertex_map");
  }
  SimplicialMap map;
  map.source = SimplicialComplex::parse(j["source"].dump());
  map.target = SimplicialComplex::parse(j["target"].dump());
  map.vertex_map = j["vertex_map"].get<std::vector<int>>();
  return map;
}

Simplex map_simplex(const SimplicialMap& map, const Simplex& s) {
  Simplex image;
  for (int v : s) {
    image.push_back(map.vertex_map.at(static_cast<std::size_t>(v)));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

MapCheck validate_map(const SimplicialMap& map) {
  MapCheck out;
  if (static_cast<int>(map.vertex_map.size()) < map.source.vertex_slots()) {
    out.valid = false;
    out.violation = "vertex_map shorter than source vertex range";
    return out;
  }
  for (int v : map.source.vertex_ids()) {
    const int w = map.vertex_map[static_cast<std::size_t>(v)];
    if (!map.target.has_vertex(w)) {
      out.valid = false;
      out.violation = "vertex " + std::to_string(v) +
                      " maps to absent target vertex " + std::to_string(w);
      return out;
    }
  }
  for (const Simplex& f : map.source.facets()) {
    if (!map.target.contains(map_simplex(map, f))) {
      out.valid = false;
      out.violation = "image of a facet is not a target simplex";
      return out;
    }
  }
  return out;
}

namespace {

std::string describe(const Simplex& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(s[i]);
  }
  return text + "}";
}

}  // namespace

JoinReport analyze_join(const SimplicialMap& map) {
  const MapCheck mc = validate_map(map);
  if (!mc.valid) throw std::invalid_argument(mc.violation);
  JoinReport report;

  // Vertex fibers.
  std::map<int, std::vector<int>> fiber;
  for (int v : map.source.vertex_ids()) {
    fiber[map.vertex_map[static_cast<std::size_t>(v)]].push_back(v);
  }
  for (int w : map.target.vertex_ids()) {
    if (fiber.find(w) == fiber.end()) {
      report.vertex_surjective = false;
      if (report.witness.empty()) {
        report.witness = "target vertex " + std::to_string(w) +
                         " has empty fiber";
      }
    }
  }

  // Group source simplices over their images; a simplex is relevant to the
  // join analysis when it maps onto its image without collapsing.
  std::map<Simplex, std::vector<Simplex>> over;
  for (int d = 0; d <= map.source.dim(); ++d) {
    for (const Simplex& s : map.source.faces(d)) {
      const Simplex image = map_simplex(map, s);
      if (image.size() != s.size()) {
        report.simplexwise_injective = false;
        if (report.witness.empty()) {
          report.witness = "simplex " + describe(s) + " collapses onto " +
                           describe(image);
        }
        continue;
      }
      over[image].push_back(s);
    }
  }

  for (int d = 0; d <= map.target.dim(); ++d) {
    for (const Simplex& t : map.target.faces(d)) {
      const std::size_t corners = t.size();
      // Per-corner participating fibers over this simplex.
      std::vector<std::set<int>> corner(corners);
      auto it = over.find(t);
      if (it != over.end()) {
        for (const Simplex& s : it->second) {
          for (int v : s) {
            const int w = map.vertex_map[static_cast<std::size_t>(v)];
            const std::size_t pos = static_cast<std::size_t>(
                std::lower_bound(t.begin(), t.end(), w) - t.begin());
            corner[pos].insert(v);
          }
        }
      }
      // Join condition: every cross-selection spans a source simplex.
      std::vector<std::set<int>::const_iterator> cursor(corners);
      bool any_empty = false;
      for (std::size_t i = 0; i < corners; ++i) {
        if (corner[i].empty()) any_empty = true;
      }
      if (!any_empty) {
        for (std::size_t i = 0; i < corners; ++i) {
          cursor[i] = corner[i].begin();
        }
        while (true) {
          Simplex pick;
          for (std::size_t i = 0; i < corners; ++i) pick.push_back(*cursor[i]);
          std::sort(pick.begin(), pick.end());
          if (!map.source.contains(pick)) {
            report.join_condition = false;
            if (report.witness.empty()) {
              report.witness = "selection " + describe(pick) + " over " +
                               describe(t) + " is not a source simplex";
            }
            break;
          }
          std::size_t i = corners;
          while (i > 0) {
            --i;
            if (++cursor[i] != corner[i].end()) break;
            cursor[i] = corner[i].begin();
            if (i == 0) {
              i = corners;
              break;
            }
          }
          if (i == corners) break;
        }
      }
      // Completeness: participating fibers equal the full vertex fibers.
      for (std::size_t i = 0; i < corners; ++i) {
        const auto fit = fiber.find(t[i]);
        const std::size_t full =
            fit == fiber.end() ? 0 : fit->second.size();
        if (corner[i].size() != full) {
          report.fibers_complete = false;
          if (report.witness.empty()) {
            report.witness = "fiber over vertex " + std::to_string(t[i]) +
                             " of " + describe(t) + " is not full";
          }
        }
      }
    }
  }
  return report;
}

bool is_join_complex_map(const SimplicialMap& map) {
  return analyze_join(map).is_join();
}

bool is_complete_join_map(const SimplicialMap& map) {
  return analyze_join(map).is_complete_join();
}

SimplicialMap section_of_complete_join(const SimplicialMap& map) {
  const JoinReport report = analyze_join(map);
  if (!report.is_complete_join()) {
    throw std::invalid_argument("map is not a complete join");
  }
  std::vector<int> choice(
      static_cast<std::size_t>(map.target.vertex_slots()), -1);
  for (int v : map.source.vertex_ids()) {
    const int w = map.vertex_map[static_cast<std::size_t>(v)];
    int& c = choice[static_cast<std::size_t>(w)];
    if (c < 0 || v < c) c = v;
  }
  SimplicialMap section;
  section.source = map.target;
  section.target = map.source;
  section.vertex_map = std::move(choice);
  const MapCheck mc = validate_map(section);
  if (!mc.valid) {
    throw std::logic_error("complete join produced an invalid section: " +
                           mc.violation);
  }
  return section;
}

FiberReport quillen_fiber_check(const SimplicialMap& map, int n) {
  const MapCheck mc = validate_map(map);
  if (!mc.valid) throw std::invalid_argument(mc.violation);
  FiberReport report;
  for (int d = 0; d <= map.target.dim(); ++d) {
    for (const Simplex& t : map.target.faces(d)) {
      std::vector<int> pulled;
      for (int v : map.source.vertex_ids()) {
        const int w = map.vertex_map[static_cast<std::size_t>(v)];
        if (std::binary_search(t.begin(), t.end(), w)) pulled.push_back(v);
      }
      const SimplicialComplex pre = map.source.full_subcomplex(pulled);
      if (!is_homologically_connected(pre, n)) {
        report.hypothesis_holds = false;
        report.violations.push_back(t);
      }
    }
  }
  report.source_connected = is_homologically_connected(map.source, n);
  report.target_connected = is_homologically_connected(map.target, n);
  report.transfer_holds = !report.hypothesis_holds ||
                          report.source_connected == report.target_connected;
  return report;
}

BarycentricFiberReport barycentric_fiber_check(const SimplicialMap& map,
                                               int n) {
  const MapCheck mc = validate_map(map);
  if (!mc.valid) throw std::invalid_argument(mc.violation);
  BarycentricFiberReport report;
  report.target_connected = is_homologically_connected(map.target, n);

  // Bucket source simplices by their exact image.
  std::map<Simplex, std::vector<Simplex>> exact;
  for (int d = 0; d <= map.source.dim(); ++d) {
    for (const Simplex& s : map.source.faces(d)) {
      exact[map_simplex(map, s)].push_back(s);
    }
  }
  for (int d = 0; d <= map.target.dim(); ++d) {
    const int need = n - d;
    for (const Simplex& t : map.target.faces(d)) {
      std::vector<Simplex> members;
      auto it = exact.find(t);
      if (it != exact.end()) members = it->second;
      const SimplicialComplex fiber = order_complex(
          members.size(), [&members](int a, int b) {
            return members[static_cast<std::size_t>(a)].size() <
                       members[static_cast<std::size_t>(b)].size() &&
                   simplex_subset(members[static_cast<std::size_t>(a)],
                                  members[static_cast<std::size_t>(b)]);
          });
      if (!is_homologically_connected(fiber, need)) {
        report.fibers_ok = false;
        report.violations.push_back(t);
      }
    }
  }
  report.hypothesis_holds = report.target_connected && report.fibers_ok;
  report.source_connected = is_homologically_connected(map.source, n);
  report.consistent = !report.hypothesis_holds || report.source_connected;
  return report;
}

}  // namespace forestlab

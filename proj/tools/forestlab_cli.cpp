#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "forestlab/diagram.hpp"
#include "forestlab/families.hpp"
#include "forestlab/homology.hpp"
#include "forestlab/morse.hpp"
#include "forestlab/simplicial.hpp"
#include "forestlab/simplicial_map.hpp"
#include "forestlab/stein_farley.hpp"
#include "forestlab/velement.hpp"
#include "json.hpp"

namespace {

using forestlab::SimplicialComplex;
using forestlab::SimplicialMap;
using json = nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

// Option values are inline payloads, "@path" for a file, or "-" for stdin.
std::string read_payload(const std::string& value) {
  if (value == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  if (!value.empty() && value.front() == '@') {
    std::ifstream in(value.substr(1));
    if (!in) {
      throw std::invalid_argument("cannot open file: " + value.substr(1));
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return value;
}

SimplicialComplex parse_complex(const std::string& value) {
  return SimplicialComplex::parse(read_payload(value));
}

SimplicialMap parse_map_payload(const std::string& value) {
  return SimplicialMap::parse(read_payload(value));
}

forestlab::SFVertex parse_vertex(const std::string& value) {
  return forestlab::SFVertex::parse(read_payload(value));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad integer list entry: " + item);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<long long> parse_tuple(const std::string& text) {
  std::vector<long long> out;
  for (int v : parse_int_list(text)) out.push_back(v);
  return out;
}

json complex_json(const SimplicialComplex& cx) {
  return json::parse(cx.serialize());
}

json simplices_json(const std::vector<forestlab::Simplex>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(s);
  return out;
}

json join_report_json(const forestlab::JoinReport& report) {
  json out;
  out["vertex_surjective"] = report.vertex_surjective;
  out["simplexwise_injective"] = report.simplexwise_injective;
  out["join_condition"] = report.join_condition;
  out["fibers_complete"] = report.fibers_complete;
  out["join"] = report.is_join();
  out["complete_join"] = report.is_complete_join();
  if (!report.witness.empty()) out["witness"] = report.witness;
  return out;
}

json conclusion_json(const forestlab::InclusionConclusion& c) {
  json out;
  out["holds"] = c.holds;
  out["m"] = c.m;
  if (!c.violation.empty()) out["violation"] = c.violation;
  json degrees = json::array();
  for (const auto& d : c.degrees) {
    degrees.push_back(json{{"degree", d.degree},
                           {"rank_sub", d.rank_sub},
                           {"rank_whole", d.rank_whole},
                           {"rank_image", d.rank_image},
                           {"injective", d.injective},
                           {"surjective", d.surjective}});
  }
  out["degrees"] = std::move(degrees);
  return out;
}

json desclink_json(const forestlab::DescendingLinkData& link) {
  json out;
  json verts = json::array();
  for (const auto& v : link.vertices) verts.push_back(json::parse(v.key()));
  out["vertices"] = std::move(verts);
  out["freed_positions"] = simplices_json(link.freed_positions);
  out["complex"] = complex_json(link.complex);
  out["projection_target"] = complex_json(link.projection.target);
  out["projection_map"] = link.projection.vertex_map;
  out["join"] = join_report_json(link.join_report);
  return out;
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

int run_table(int nmax, int dmax, int jobs) {
  if (jobs <= 0) {
    if (const char* env = std::getenv("FORESTLAB_JOBS")) {
      jobs = std::atoi(env);
    }
  }
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
  }
  if (jobs <= 0) jobs = 1;
  const auto rows = forestlab::hypergraph_table(nmax, dmax, jobs);
  std::cout << forestlab::hypergraph_table_csv(rows);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forest diagram group elements and simplicial complex tools"};
  app.require_subcommand(1);
  std::function<int()> action;

  // Group element arithmetic on paired forest diagrams.
  auto* v = app.add_subcommand("v", "group element operations");
  v->require_subcommand(1);
  {
    auto* cmd = v->add_subcommand("reduce", "reduce a paired forest diagram");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "diagram JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        const auto diagram =
            forestlab::PairedForestDiagram::parse(read_payload(*in));
        std::cout << diagram.reduce().serialize() << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = v->add_subcommand("mul", "compose two elements, left first");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("--a", *a, "left element JSON")->required();
    cmd->add_option("--b", *b, "right element JSON")->required();
    cmd->callback([&action, a, b] {
      action = [a, b] {
        const auto ea = forestlab::VElement::parse(read_payload(*a));
        const auto eb = forestlab::VElement::parse(read_payload(*b));
        std::cout << multiply(ea, eb).serialize() << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = v->add_subcommand("inv", "invert an element");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "element JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        std::cout
            << forestlab::VElement::parse(read_payload(*in)).inverse()
                   .serialize()
            << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = v->add_subcommand("eq", "compare two elements");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("--a", *a, "element JSON")->required();
    cmd->add_option("--b", *b, "element JSON")->required();
    cmd->callback([&action, a, b] {
      action = [a, b] {
        const bool equal = forestlab::VElement::parse(read_payload(*a)) ==
                           forestlab::VElement::parse(read_payload(*b));
        std::cout << (equal ? "true" : "false") << "\n";
        return equal ? kExitTrue : kExitFalse;
      };
    });
  }

  // Complex-level queries.
  auto* cx = app.add_subcommand("cx", "simplicial complex operations");
  cx->require_subcommand(1);
  {
    auto* cmd = cx->add_subcommand("homology", "reduced integral homology");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "complex JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        std::cout << forestlab::homology_to_json(
                         forestlab::reduced_homology(parse_complex(*in)))
                  << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = cx->add_subcommand("flag", "test for missing clique fillings");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "complex JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        const auto report = parse_complex(*in).flag_report();
        json out;
        out["flag"] = report.flag;
        if (!report.flag) out["witness"] = report.witness;
        emit(out);
        return report.flag ? kExitTrue : kExitFalse;
      };
    });
  }
  {
    auto* cmd = cx->add_subcommand(
        "wcm", "connectivity of the complex and all simplex links");
    auto in = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    cmd->add_option("--in", *in, "complex JSON")->required();
    cmd->add_option("--n", *n, "target dimension")->required();
    cmd->callback([&action, in, n] {
      action = [in, n] {
        const auto report = forestlab::wcm_report(parse_complex(*in), *n);
        json out;
        out["verdict"] = report.verdict;
        out["n"] = report.n;
        out["violations"] = report.violations;
        emit(out);
        return report.verdict ? kExitTrue : kExitFalse;
      };
    });
  }
  {
    auto* cmd = cx->add_subcommand("link", "link of a simplex");
    auto in = std::make_shared<std::string>();
    auto simplex = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "complex JSON")->required();
    cmd->add_option("--simplex", *simplex, "comma separated vertex ids")
        ->required();
    cmd->callback([&action, in, simplex] {
      action = [in, simplex] {
        const auto complex = parse_complex(*in);
        const auto s = forestlab::make_simplex(parse_int_list(*simplex));
        std::cout << complex.link(s).serialize() << "\n";
        return kExitTrue;
      };
    });
  }

  // Complex families.
  auto* family = app.add_subcommand("family", "complex constructions");
  family->require_subcommand(1);
  {
    auto* cmd = family->add_subcommand(
        "hypergraph", "complex of disjoint d-subsets of {1..n}");
    auto n = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    cmd->add_option("--n", *n, "ground set size")->required();
    cmd->add_option("--d", *d, "subset size")->required();
    cmd->callback([&action, n, d] {
      action = [n, d] {
        std::cout << forestlab::hypergraph_complex(*n, *d).serialize()
                  << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = family->add_subcommand("pair", "complex of coordinate pairs");
    auto h = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("injective");
    cmd->add_option("--first", *h, "first factor JSON")->required();
    cmd->add_option("--second", *b, "second factor JSON")->required();
    cmd->add_option("--mode", *mode, "injective or extended");
    cmd->callback([&action, h, b, mode] {
      action = [h, b, mode] {
        forestlab::PairMode m;
        if (*mode == "injective") {
          m = forestlab::PairMode::injective;
        } else if (*mode == "extended") {
          m = forestlab::PairMode::extended;
        } else {
          throw std::invalid_argument("mode must be injective or extended");
        }
        std::cout << forestlab::pair_complex(parse_complex(*h),
                                             parse_complex(*b), m)
                         .serialize()
                  << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = family->add_subcommand("nerve", "nerve of a family");
    auto members = std::make_shared<std::string>();
    cmd->add_option("--members", *members, "JSON array of complexes")
        ->required();
    cmd->callback([&action, members] {
      action = [members] {
        const json arr = json::parse(read_payload(*members));
        if (!arr.is_array()) {
          throw std::invalid_argument("--members must be a JSON array");
        }
        std::vector<SimplicialComplex> list;
        for (const auto& item : arr) {
          list.push_back(SimplicialComplex::parse(item.dump()));
        }
        std::cout << forestlab::nerve_complex(list).serialize() << "\n";
        return kExitTrue;
      };
    });
  }

  // Height-based gluing checks.
  auto* morse = app.add_subcommand("morse", "height function analysis");
  morse->require_subcommand(1);
  {
    auto* cmd = morse->add_subcommand(
        "verify", "descending-link hypothesis against sublevel conclusion");
    auto in = std::make_shared<std::string>();
    auto height = std::make_shared<std::string>();
    auto cutoff = std::make_shared<std::string>();
    auto m = std::make_shared<int>(0);
    cmd->add_option("--in", *in, "complex JSON")->required();
    cmd->add_option("--height", *height,
                    "height JSON {\"arity\":k,\"values\":[[..]..]}")
        ->required();
    cmd->add_option("--cutoff", *cutoff, "comma separated height tuple")
        ->required();
    cmd->add_option("--m", *m, "connectivity degree")->required();
    cmd->callback([&action, in, height, cutoff, m] {
      action = [in, height, cutoff, m] {
        const auto complex = parse_complex(*in);
        const json hj = json::parse(read_payload(*height));
        forestlab::HeightFunction h;
        h.arity = hj.at("arity").get<int>();
        h.values = hj.at("values").get<std::vector<forestlab::HeightTuple>>();
        const auto report = forestlab::morse_lemma_verify(
            complex, h, parse_tuple(*cutoff), *m);
        json out;
        out["hypothesis_holds"] = report.hypothesis_holds;
        out["hypothesis_violations"] = report.hypothesis_violations;
        out["conclusion_holds"] = report.conclusion_holds;
        out["conclusion"] = conclusion_json(report.conclusion);
        out["consistent"] = report.consistent;
        emit(out);
        return report.consistent ? kExitTrue : kExitFalse;
      };
    });
  }
  {
    auto* cmd = morse->add_subcommand(
        "badsimplex", "distinguished-face hypothesis against the good part");
    auto in = std::make_shared<std::string>();
    auto colors = std::make_shared<std::string>();
    auto good = std::make_shared<std::string>();
    auto m = std::make_shared<int>(0);
    cmd->add_option("--in", *in, "complex JSON")->required();
    auto* copt =
        cmd->add_option("--colors", *colors, "comma separated vertex colors");
    auto* gopt = cmd->add_option(
        "--good", *good, "comma separated 0/1 flags, 1 marks good vertices");
    copt->excludes(gopt);
    cmd->add_option("--m", *m, "connectivity degree")->required();
    cmd->callback([&action, in, colors, good, m, copt, gopt] {
      const bool use_colors = copt->count() > 0;
      const bool use_good = gopt->count() > 0;
      action = [in, colors, good, m, use_colors, use_good] {
        if (use_colors == use_good) {
          throw std::invalid_argument(
              "exactly one of --colors and --good is required");
        }
        const auto complex = parse_complex(*in);
        forestlab::BarOperator op;
        if (use_colors) {
          op = forestlab::coloring_to_bar(parse_int_list(*colors));
        } else {
          std::vector<char> flags;
          for (int x : parse_int_list(*good)) {
            flags.push_back(x ? 1 : 0);
          }
          op = forestlab::partition_to_bar(flags);
        }
        const auto report = forestlab::bad_simplex_analyze(complex, op, *m);
        json out;
        out["hypothesis_holds"] = report.hypothesis_holds;
        out["bad_simplices"] = simplices_json(report.bad_simplices);
        out["hypothesis_violations"] =
            simplices_json(report.hypothesis_violations);
        out["good_subcomplex"] = complex_json(report.good_subcomplex);
        out["conclusion_holds"] = report.conclusion_holds;
        out["conclusion"] = conclusion_json(report.conclusion);
        out["consistent"] = report.consistent;
        emit(out);
        return report.consistent ? kExitTrue : kExitFalse;
      };
    });
  }

  // Simplicial map analysis.
  auto* maps = app.add_subcommand("maps", "simplicial map analysis");
  maps->require_subcommand(1);
  const auto add_map_cmd = [&action, maps](const char* name, const char* desc,
                                           auto handler, bool wants_n) {
    auto* cmd = maps->add_subcommand(name, desc);
    auto payload = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    cmd->add_option("--map", *payload, "map JSON")->required();
    if (wants_n) cmd->add_option("--n", *n, "connectivity degree")->required();
    cmd->callback([&action, payload, n, handler] {
      action = [payload, n, handler] {
        return handler(parse_map_payload(*payload), *n);
      };
    });
  };
  add_map_cmd(
      "completejoin", "full join decomposition over the target",
      [](const SimplicialMap& map, int) {
        const auto report = forestlab::analyze_join(map);
        emit(join_report_json(report));
        return report.is_complete_join() ? kExitTrue : kExitFalse;
      },
      false);
  add_map_cmd(
      "joincx", "join decomposition over the target",
      [](const SimplicialMap& map, int) {
        const auto report = forestlab::analyze_join(map);
        emit(join_report_json(report));
        return report.is_join() ? kExitTrue : kExitFalse;
      },
      false);
  add_map_cmd(
      "quillen", "preimage connectivity transfer",
      [](const SimplicialMap& map, int n) {
        const auto report = forestlab::quillen_fiber_check(map, n);
        json out;
        out["hypothesis_holds"] = report.hypothesis_holds;
        out["violations"] = simplices_json(report.violations);
        out["source_connected"] = report.source_connected;
        out["target_connected"] = report.target_connected;
        out["transfer_holds"] = report.transfer_holds;
        emit(out);
        return report.transfer_holds ? kExitTrue : kExitFalse;
      },
      true);
  add_map_cmd(
      "fiber", "exact-image fiber connectivity transfer",
      [](const SimplicialMap& map, int n) {
        const auto report = forestlab::barycentric_fiber_check(map, n);
        json out;
        out["target_connected"] = report.target_connected;
        out["fibers_ok"] = report.fibers_ok;
        out["violations"] = simplices_json(report.violations);
        out["hypothesis_holds"] = report.hypothesis_holds;
        out["source_connected"] = report.source_connected;
        out["consistent"] = report.consistent;
        emit(out);
        return report.consistent ? kExitTrue : kExitFalse;
      },
      true);

  // Expansion poset vertices and their local structure.
  auto* sf = app.add_subcommand("sf", "expansion poset local structure");
  sf->require_subcommand(1);
  {
    auto* cmd = sf->add_subcommand("vertex", "canonicalize a vertex");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "vertex JSON {\"support\":[..],\"rep\":{..}}")
        ->required();
    cmd->callback([&action, in] {
      action = [in] {
        std::cout << parse_vertex(*in).serialize() << "\n";
        return kExitTrue;
      };
    });
  }
  {
    auto* cmd = sf->add_subcommand("desclink", "descending link with its "
                                               "projection to disjoint sets");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "vertex JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        const auto link = forestlab::descending_link(parse_vertex(*in));
        emit(desclink_json(link));
        return link.join_report.is_complete_join() ? kExitTrue : kExitFalse;
      };
    });
  }
  {
    auto* cmd = sf->add_subcommand("link", "descending plus ascending link");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "vertex JSON")->required();
    cmd->callback([&action, in] {
      action = [in] {
        const auto report =
            forestlab::local_link_flag_check(parse_vertex(*in));
        json out;
        out["descending"] = desclink_json(report.descending);
        json asc = json::array();
        for (const auto& a : report.ascending) {
          asc.push_back(json::parse(a.key()));
        }
        out["ascending"] = std::move(asc);
        out["combined"] = complex_json(report.combined);
        out["descending_flag"] = report.descending_flag;
        out["combined_flag"] = report.combined_flag;
        out["flags_agree"] = report.flags_agree;
        emit(out);
        return report.flags_agree ? kExitTrue : kExitFalse;
      };
    });
  }
  {
    auto* cmd = sf->add_subcommand("cube", "interval above a vertex");
    auto in = std::make_shared<std::string>();
    auto leaves = std::make_shared<std::string>();
    auto check_order = std::make_shared<bool>(false);
    cmd->add_option("--in", *in, "vertex JSON")->required();
    cmd->add_option("--leaves", *leaves, "comma separated leaf positions")
        ->required();
    cmd->add_flag("--check-order", *check_order,
                  "verify the order relations pairwise");
    cmd->callback([&action, in, leaves, check_order] {
      action = [in, leaves, check_order] {
        const auto cube = forestlab::cube_interval(parse_vertex(*in),
                                                   parse_int_list(*leaves));
        json out;
        out["subsets"] = cube.subsets;
        json verts = json::array();
        for (const auto& v : cube.vertices) {
          verts.push_back(json::parse(v.key()));
        }
        out["vertices"] = std::move(verts);
        out["all_distinct"] = cube.all_distinct;
        bool ok = cube.all_distinct;
        if (*check_order) {
          const bool boolean = forestlab::cube_is_boolean(cube);
          out["boolean"] = boolean;
          ok = ok && boolean;
        }
        emit(out);
        return ok ? kExitTrue : kExitFalse;
      };
    });
  }

  // Batch survey.
  auto* table = app.add_subcommand("table", "batch surveys");
  table->require_subcommand(1);
  {
    auto* cmd = table->add_subcommand(
        "hypergraph", "CSV survey of disjoint-subset complexes");
    auto nmax = std::make_shared<int>(0);
    auto dmax = std::make_shared<int>(2);
    auto jobs = std::make_shared<int>(0);
    cmd->add_option("--nmax", *nmax, "largest ground set")->required();
    cmd->add_option("--dmax", *dmax, "largest subset size");
    cmd->add_option("--jobs", *jobs,
                    "worker threads (default FORESTLAB_JOBS or hardware)");
    cmd->callback([&action, nmax, dmax, jobs] {
      action = [nmax, dmax, jobs] { return run_table(*nmax, *dmax, *jobs); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

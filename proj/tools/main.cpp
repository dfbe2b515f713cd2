#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qweave/lc_orbit.hpp"
#include "qweave/session.hpp"
#include "qweave/verify.hpp"

namespace {

using namespace qweave;

std::string ledger_line(const ResourceLedger& ledger) {
  return "ledger: generated=" + std::to_string(ledger.epr_generated) +
         " intra=" + std::to_string(ledger.epr_consumed_intra) +
         " inter=" + std::to_string(ledger.epr_consumed_inter);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

VertexId parse_vertex_token(const std::string& token,
                            const QlanNetwork& net) {
  if (!token.empty() &&
      token.find_first_not_of("0123456789") == std::string::npos) {
    return VertexId{static_cast<std::uint32_t>(std::stoul(token))};
  }
  // label form: qlan_role_index, e.g. 2_client_1
  auto first = token.find('_');
  auto second = token.find('_', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw InvalidParamsError("cannot parse vertex '" + token + "'");
  }
  int qlan_id = std::stoi(token.substr(0, first));
  std::string role_text = token.substr(first + 1, second - first - 1);
  int index = std::stoi(token.substr(second + 1));
  QlanRole role;
  if (role_text == "super") {
    role = QlanRole::Super;
  } else if (role_text == "client") {
    role = QlanRole::Client;
  } else {
    throw InvalidParamsError("unknown role '" + role_text + "'");
  }
  return lookup_vertex(net, qlan_id, role, index);
}

const Graph& referenced_graph(const Session& session,
                              const std::string& what) {
  if (what == "shared") {
    const QlanNetwork& net = session.require_network();
    if (!net.shared_graph) {
      throw SessionError("no shared graph; run 'merge' first");
    }
    return *net.shared_graph;
  }
  if (what == "result") {
    return session.last_report().result;
  }
  throw SessionError("unknown graph reference '" + what + "'");
}

struct CommonFlags {
  std::string session_path;
  bool as_json = false;
};

int run_build(const CommonFlags& flags, std::size_t n1, std::size_t n2) {
  Session session;  // build starts a fresh session
  QlanNetwork net = build_network(n1, n2);
  session.network = std::move(net);
  save_session(session, flags.session_path);
  if (flags.as_json) {
    std::cout << network_to_json(*session.network).dump(2) << '\n';
  } else {
    std::cout << "built QLAN 1 (n=" << n1 << ") and QLAN 2 (n=" << n2
              << ")\n"
              << ledger_line(session.network->ledger) << '\n';
  }
  return 0;
}

int run_merge(const CommonFlags& flags) {
  Session session = load_session(flags.session_path);
  QlanNetwork merged = merge_remote_cz(session.require_network());
  session.network = std::move(merged);
  save_session(session, flags.session_path);
  const QlanNetwork& net = *session.network;
  if (flags.as_json) {
    std::cout << network_to_json(net).dump(2) << '\n';
  } else {
    std::cout << "merged: binary star on " << net.shared_graph->vertex_count()
              << " vertices, " << net.shared_graph->edge_count() << " edges\n"
              << ledger_line(net.ledger) << '\n';
  }
  return 0;
}

int run_apply(const CommonFlags& flags, const std::string& recipe_name,
              const std::string& side_name, std::optional<int> client_j,
              std::optional<int> client_i, bool with_dot) {
  Session session = load_session(flags.session_path);
  const QlanNetwork& net = session.require_network();

  RecipeKind kind = recipe_from_cli_name(recipe_name);
  RecipeParams params;
  if (side_name == "left") {
    params.side = TargetSide::Left;
  } else if (side_name == "right") {
    params.side = TargetSide::Right;
  } else {
    throw InvalidParamsError("side must be left or right");
  }
  params.client_j = client_j;
  params.client_i = client_i;

  RecipeReport report = apply_recipe(net, kind, params);
  session.reports.push_back(report);
  save_session(session, flags.session_path);

  if (flags.as_json) {
    std::cout << report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "applied " << recipe_cli_name(kind) << " side=" << side_name
              << ": " << report.plan.size() << " measurements\n"
              << "result: " << report.result.vertex_count() << " vertices, "
              << report.result.edge_count() << " edges\n"
              << "matched: " << yes_no(report.matched) << '\n';
  }
  if (with_dot) {
    std::cout << "-- before --\n"
              << to_dot(*net.shared_graph) << "-- after --\n"
              << to_dot(report.result);
  }
  return report.matched ? 0 : 1;
}

int run_restrict(const CommonFlags& flags, const std::string& keep_csv) {
  Session session = load_session(flags.session_path);
  const QlanNetwork& net = session.require_network();
  const RecipeReport& last = session.last_report();

  std::set<VertexId> keep;
  std::string token;
  for (std::size_t k = 0; k <= keep_csv.size(); ++k) {
    if (k == keep_csv.size() || keep_csv[k] == ',') {
      if (!token.empty()) keep.insert(parse_vertex_token(token, net));
      token.clear();
    } else {
      token += keep_csv[k];
    }
  }

  RecipeReport next = last;
  next.plan = restrict_to_subset(last.plan, last.expected, keep);
  next.expected = induced_subgraph(last.expected, keep);
  SequenceResult run = measure_sequence(*net.shared_graph, next.plan);
  next.result = std::move(run.graph);
  next.trace = std::move(run.trace);
  next.matched = graph_equal(next.result, next.expected);
  session.reports.push_back(next);
  save_session(session, flags.session_path);

  if (flags.as_json) {
    std::cout << report_to_json(session.reports.back()).dump(2) << '\n';
  } else {
    std::cout << "restricted result to " << keep.size() << " vertices: "
              << session.reports.back().plan.size() << " measurements\n"
              << "matched: " << yes_no(session.reports.back().matched)
              << '\n';
  }
  return session.reports.back().matched ? 0 : 1;
}

int run_verify(const CommonFlags& flags, std::optional<std::size_t> exhaustive,
               bool recipes, std::size_t nmax) {
  if (exhaustive && recipes) {
    throw InvalidParamsError("choose either --exhaustive or --recipes");
  }
  if (recipes) {
    RecipeGridResult grid = verify_recipe_grid(nmax, flags.as_json);
    if (flags.as_json) {
      Json j;
      j["mode"] = "recipes";
      j["n_max"] = nmax;
      j["cases"] = grid.cases;
      j["failures"] = grid.failures;
      Json records = Json::array();
      for (const GridCase& c : grid.records) {
        records.push_back(grid_case_to_json(c));
      }
      j["records"] = std::move(records);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "recipe grid up to n=" << nmax << ": " << grid.cases
                << " cases, " << grid.failures << " failures\n";
    }
    return grid.failures == 0 ? 0 : 1;
  }

  const std::size_t n_max = exhaustive.value_or(4);
  if (n_max < 1 || n_max > 5) {
    throw InvalidParamsError("--exhaustive takes n between 1 and 5");
  }
  ExhaustiveCertifyResult result = exhaustive_certify(n_max, flags.as_json);
  if (flags.as_json) {
    Json j;
    j["mode"] = "exhaustive";
    j["n_max"] = n_max;
    j["graphs"] = result.graphs;
    j["cases"] = result.cases;
    j["failures"] = result.failures;
    Json records = Json::array();
    for (const CertifyCase& c : result.records) {
      records.push_back(certify_case_to_json(c));
    }
    j["records"] = std::move(records);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "exhaustive certification of all graphs with n <= " << n_max
              << '\n';
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::cout << "n=" << n << ": " << result.graphs_per_n[n - 1]
                << " graphs, " << result.cases_per_n[n - 1] << " cases\n";
    }
    if (result.failures == 0) {
      std::cout << "all " << result.cases << " cases pass\n";
    } else {
      std::cout << result.failures << " of " << result.cases
                << " cases FAIL\n";
    }
  }
  return result.failures == 0 ? 0 : 1;
}

int run_export(const CommonFlags& flags, const std::string& format,
               const std::string& what) {
  Session session = load_session(flags.session_path);
  const Graph& g = referenced_graph(session, what);
  if (format == "dot") {
    std::cout << to_dot(g);
  } else if (format == "json") {
    std::cout << graph_to_json(g).dump(2) << '\n';
  } else {
    throw InvalidParamsError("format must be dot or json");
  }
  return 0;
}

int run_orbit(const CommonFlags& flags, const std::string& what,
              std::size_t cap) {
  Session session = load_session(flags.session_path);
  const Graph& g = referenced_graph(session, what);
  LcOrbit orbit = lc_orbit(g, cap);
  if (flags.as_json) {
    Json j;
    j["size"] = orbit.graphs.size();
    j["truncated"] = orbit.truncated;
    Json graphs = Json::array();
    for (const Graph& member : orbit.graphs) {
      graphs.push_back(graph_to_json(member));
    }
    j["graphs"] = std::move(graphs);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "orbit of " << what << ": " << orbit.graphs.size()
              << " graphs ("
              << (orbit.truncated ? "truncated" : "complete") << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"engineering artificial inter-QLAN topologies from binary "
               "star graph states"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string session_flag;
  unsigned seed = 0;
  app.add_option("--session", session_flag,
                 "session file (default: QW_SESSION or qweave-session.json)");
  app.add_flag("--json", flags.as_json, "emit machine-readable JSON");
  app.add_option("--seed", seed, "reserved for future sampling modes");

  auto* build = app.add_subcommand("build", "distribute both QLAN stars");
  std::size_t n1 = 0, n2 = 0;
  build->add_option("--n1", n1, "nodes in QLAN 1")->required();
  build->add_option("--n2", n2, "nodes in QLAN 2")->required();

  auto* merge =
      app.add_subcommand("merge", "remote CZ between the super-nodes");

  auto* apply = app.add_subcommand("apply", "run an artificial-topology "
                                            "recipe");
  std::string recipe_name;
  std::string side_name = "right";
  int client_j_val = 0, client_i_val = 0;
  bool with_dot = false;
  apply->add_option("recipe", recipe_name, "recipe name")->required();
  apply->add_option("--side", side_name, "target side: left|right");
  auto* opt_j = apply->add_option("--client-j", client_j_val,
                                  "client index in the measured-away QLAN");
  auto* opt_i = apply->add_option("--client-i", client_i_val,
                                  "client index in the target QLAN");
  apply->add_flag("--dot", with_dot, "also print before/after DOT");

  auto* restrict_cmd = app.add_subcommand(
      "restrict", "shrink the last result with extra Pauli-z measurements");
  std::string keep_csv;
  restrict_cmd->add_option("--keep", keep_csv, "comma-separated vertices")
      ->required();

  auto* verify = app.add_subcommand("verify", "stabilizer-oracle checks");
  std::size_t exhaustive_n = 0;
  bool recipes_mode = false;
  std::size_t nmax = 6;
  auto* opt_ex = verify->add_option("--exhaustive", exhaustive_n,
                                    "certify all graphs with n <= N");
  verify->add_flag("--recipes", recipes_mode, "check the recipe grid");
  verify->add_option("--nmax", nmax, "grid bound for --recipes");

  auto* export_cmd = app.add_subcommand("export", "serialize a graph");
  std::string format = "dot";
  std::string what = "shared";
  export_cmd->add_option("--format", format, "dot|json");
  export_cmd->add_option("--what", what, "shared|result");

  auto* orbit_cmd =
      app.add_subcommand("orbit", "local-complementation orbit of a graph");
  std::string orbit_what = "result";
  std::size_t orbit_cap = qweave::kDefaultOrbitCap;
  orbit_cmd->add_option("--what", orbit_what, "shared|result");
  orbit_cmd->add_option("--cap", orbit_cap, "orbit size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  flags.session_path = qweave::resolve_session_path(session_flag);

  try {
    if (build->parsed()) return run_build(flags, n1, n2);
    if (merge->parsed()) return run_merge(flags);
    if (apply->parsed()) {
      std::optional<int> cj, ci;
      if (opt_j->count() > 0) cj = client_j_val;
      if (opt_i->count() > 0) ci = client_i_val;
      return run_apply(flags, recipe_name, side_name, cj, ci, with_dot);
    }
    if (restrict_cmd->parsed()) return run_restrict(flags, keep_csv);
    if (verify->parsed()) {
      std::optional<std::size_t> ex;
      if (opt_ex->count() > 0) ex = exhaustive_n;
      return run_verify(flags, ex, recipes_mode, nmax);
    }
    if (export_cmd->parsed()) return run_export(flags, format, what);
    if (orbit_cmd->parsed()) return run_orbit(flags, orbit_what, orbit_cap);
  } catch (const qweave::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

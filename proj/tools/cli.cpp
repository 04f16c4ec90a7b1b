#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "essspec/canonical.hpp"
#include "essspec/connectivity.hpp"
#include "essspec/errors.hpp"
#include "essspec/extremal.hpp"
#include "essspec/graph_io.hpp"
#include "essspec/report_json.hpp"
#include "essspec/spectral.hpp"
#include "essspec/verify.hpp"

namespace essspec::cli {
namespace {

using nlohmann::json;

struct Common {
  std::string file;
  std::string format;
  bool json = false;
  int threads = default_thread_count();
  double tol = 1e-12;
  std::uint64_t seed = kDefaultSeed;
  int max_n = kDefaultMaxEnumerationOrder;
};

void add_input(CLI::App* app, Common& c) {
  app->add_option("--file", c.file, "Input graph file ('-' for stdin)")->required();
  app->add_option("--format", c.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"el", "g6", "d6"}));
}

void add_json(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Emit JSON");
}

void add_tol(CLI::App* app, Common& c) {
  app->add_option("--tol", c.tol, "Relative enclosure width for power iteration")
      ->check(CLI::PositiveNumber);
}

void add_run_flags(CLI::App* app, Common& c) {
  add_json(app, c);
  add_tol(app, c);
  app->add_option("--threads", c.threads, "Worker threads (default: $ESSSPEC_THREADS or 1)")
      ->check(CLI::Range(1, 1024));
  app->add_option("--seed", c.seed, "Seed for randomized campaigns");
  app->add_option("--max-n", c.max_n, "Largest order exhaustive enumeration may use")
      ->check(CLI::Range(1, 9));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

GraphFormat infer_format(const Common& c, const std::string& text) {
  if (!c.format.empty()) return parse_format_name(c.format);
  const auto dot = c.file.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = c.file.substr(dot + 1);
    if (ext == "el" || ext == "g6" || ext == "d6") return parse_format_name(ext);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '&') return GraphFormat::kDigraph6;
  std::istringstream probe(text);
  long long a = 0;
  long long b = 0;
  if (probe >> a >> b) return GraphFormat::kEdgeList;
  return GraphFormat::kGraph6;
}

AnyGraph load(const Common& c) {
  const std::string text = read_input(c.file);
  return parse_graph(text, infer_format(c, text));
}

VerifyConfig config_of(const Common& c) {
  VerifyConfig cfg;
  cfg.threads = c.threads;
  cfg.tol = c.tol;
  cfg.seed = c.seed;
  cfg.max_n = c.max_n;
  return cfg;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int emit_report(const VerificationReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json(r).dump(2) << '\n';
  } else {
    out << r.claim;
    for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
    out << "\n  candidates examined: " << r.candidates_examined
        << "\n  min lambda1:         " << std::setprecision(17) << r.min_lambda1.value
        << " in [" << r.min_lambda1.lower << ", " << r.min_lambda1.upper << "]"
        << "\n  minimizer:           " << r.minimizer_canonical
        << "\n  construction:        " << r.construction_canonical
        << "\n  extremal matches:    " << yes_no(r.extremal_matches)
        << "\n  unique minimizer:    " << yes_no(r.uniqueness)
        << "\n  runtime:             " << r.runtime_ms << " ms\n";
    if (r.details.value("construction_infeasible", false)) {
      out << "  construction infeasible: "
          << r.details.value("construction_error", std::string()) << '\n';
    }
  }
  if (r.details.value("construction_infeasible", false)) return kExitUsage;
  return r.extremal_matches ? kExitOk : kExitVerificationFailed;
}

int emit_campaign(const CampaignReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json(r).dump(2) << '\n';
  } else {
    out << r.claim;
    for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
    out << "\n  trials:   " << r.trials << "\n  failures: " << r.failures
        << "\n  passed:   " << yes_no(r.passed()) << "\n  runtime:  " << r.runtime_ms << " ms\n";
  }
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

int emit_single(const std::string& claim, bool holds, json details, bool as_json,
                std::ostream& out) {
  if (as_json) {
    details["claim"] = claim;
    details["holds"] = holds;
    out << details.dump(2) << '\n';
  } else {
    out << claim << ": " << (holds ? "holds" : "FAILS") << '\n';
  }
  return holds ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance spectral radius and essential connectivity toolkit", "essspec"};
  app.require_subcommand(1);
  std::function<int()> action;

  // spectrum --------------------------------------------------------
  Common spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Distance spectral radius of a graph or digraph (JSON)");
  add_input(spectrum, spectrum_opts);
  add_tol(spectrum, spectrum_opts);
  add_json(spectrum, spectrum_opts);
  spectrum->callback([&] {
    action = [&] {
      const AnyGraph g = load(spectrum_opts);
      const bool directed = std::holds_alternative<Digraph>(g);
      const DistanceMatrix d = directed ? directed_distance_matrix(std::get<Digraph>(g))
                                        : distance_matrix(std::get<Graph>(g));
      const auto r = spectral_radius(d, {spectrum_opts.tol});
      json j = r;
      j["n"] = d.order();
      j["directed"] = directed;
      out << j.dump(2) << '\n';
      return kExitOk;
    };
  });

  // essconn / vconn -------------------------------------------------
  Common essconn_opts;
  auto* essconn = app.add_subcommand("essconn", "Essential connectivity with a certificate");
  add_input(essconn, essconn_opts);
  add_json(essconn, essconn_opts);
  essconn->callback([&] {
    action = [&] {
      const AnyGraph g = load(essconn_opts);
      const auto cert = std::holds_alternative<Digraph>(g)
                            ? digraph_essential_connectivity(std::get<Digraph>(g))
                            : essential_connectivity(std::get<Graph>(g));
      if (essconn_opts.json) {
        json j = cert ? json(*cert) : json{{"essential_connectivity", nullptr}};
        j["defined"] = cert.has_value();
        out << j.dump(2) << '\n';
      } else if (cert) {
        out << "essential connectivity: " << cert->size() << "\ncut:";
        for (Vertex v : cert->cut) out << ' ' << v;
        out << "\ncomponents: " << json(cert->partition).dump() << '\n';
      } else {
        out << "essential connectivity: undefined (no essential cut exists)\n";
      }
      return kExitOk;
    };
  });

  Common vconn_opts;
  auto* vconn = app.add_subcommand("vconn", "Vertex connectivity of an undirected graph");
  add_input(vconn, vconn_opts);
  add_json(vconn, vconn_opts);
  vconn->callback([&] {
    action = [&] {
      const AnyGraph g = load(vconn_opts);
      if (!std::holds_alternative<Graph>(g)) throw InvalidArgument("vconn expects an undirected graph");
      const int k = vertex_connectivity(std::get<Graph>(g));
      if (vconn_opts.json) {
        out << json{{"vertex_connectivity", k}}.dump(2) << '\n';
      } else {
        out << "vertex connectivity: " << k << '\n';
      }
      return kExitOk;
    };
  });

  // construct -------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build an extremal graph");
  construct->require_subcommand(1);
  int c_n = 0, c_kappa = 0, c_delta = 0, c_k = 0, c_n1 = 0;
  std::string c_out;
  auto out_option = [&](CLI::App* sub) {
    sub->add_option("--out", c_out, "Output format")->check(CLI::IsMember({"el", "g6", "d6"}));
  };
  auto emit_graph = [&](const AnyGraph& g, GraphFormat fallback) {
    const GraphFormat f = c_out.empty() ? fallback : parse_format_name(c_out);
    std::string text = write_graph(g, f);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    return kExitOk;
  };
  auto* c_thm1 = construct->add_subcommand("thm1", "K_kappa v (K_2 u K_{n-kappa-2})");
  c_thm1->add_option("--n", c_n)->required();
  c_thm1->add_option("--kappa", c_kappa)->required();
  out_option(c_thm1);
  c_thm1->callback([&] {
    action = [&] { return emit_graph(theorem1_extremal(c_n, c_kappa), GraphFormat::kGraph6); };
  });
  auto* c_thm2 = construct->add_subcommand("thm2", "Extremal graph for essential connectivity and minimum degree");
  c_thm2->add_option("--n", c_n)->required();
  c_thm2->add_option("--kappa", c_kappa)->required();
  c_thm2->add_option("--delta", c_delta)->required();
  out_option(c_thm2);
  c_thm2->callback([&] {
    action = [&] { return emit_graph(theorem2_extremal(c_n, c_kappa, c_delta), GraphFormat::kGraph6); };
  });
  auto* c_thm3 = construct->add_subcommand("thm3", "Digraph family member K_k join (K_n1 u K_n2) plus one-way arcs");
  c_thm3->add_option("--n", c_n)->required();
  c_thm3->add_option("--k", c_k)->required();
  c_thm3->add_option("--n1", c_n1)->required();
  out_option(c_thm3);
  c_thm3->callback([&] {
    action = [&] { return emit_graph(theorem3_extremal(c_n, c_k, c_n1), GraphFormat::kDigraph6); };
  });

  // verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check a claim exhaustively or by campaign");
  verify->require_subcommand(1);
  Common v_opts;
  int v_n = 0, v_kappa = 0, v_delta = 0, v_k = 0;
  int v_samples = 200;
  std::uint64_t v_budget = 2'000'000;
  std::uint64_t v_trials = 1000;

  auto* v_thm1 = verify->add_subcommand("thm1", "Exhaustive check of the essential-connectivity minimizer");
  v_thm1->add_option("--n", v_n)->required();
  v_thm1->add_option("--kappa", v_kappa)->required();
  add_run_flags(v_thm1, v_opts);
  v_thm1->callback([&] {
    action = [&] { return emit_report(verify_theorem1(v_n, v_kappa, config_of(v_opts)), v_opts.json, out); };
  });

  auto* v_thm2 = verify->add_subcommand("thm2", "Exhaustive check with a minimum degree constraint");
  v_thm2->add_option("--n", v_n)->required();
  v_thm2->add_option("--kappa", v_kappa)->required();
  v_thm2->add_option("--delta", v_delta)->required();
  add_run_flags(v_thm2, v_opts);
  v_thm2->callback([&] {
    action = [&] {
      return emit_report(verify_theorem2(v_n, v_kappa, v_delta, config_of(v_opts)), v_opts.json, out);
    };
  });

  auto* v_thm3 = verify->add_subcommand("thm3", "Digraph family sweep plus random sampling");
  v_thm3->add_option("--n", v_n)->required();
  v_thm3->add_option("--k", v_k)->required();
  v_thm3->add_option("--samples", v_samples, "Random digraphs wanted (n <= 7)")->check(CLI::NonNegativeNumber);
  v_thm3->add_option("--budget", v_budget, "Random draws allowed");
  add_run_flags(v_thm3, v_opts);
  v_thm3->callback([&] {
    action = [&] {
      VerifyConfig cfg = config_of(v_opts);
      cfg.samples = v_samples;
      cfg.sample_budget = v_budget;
      return emit_report(verify_theorem3_family(v_n, v_k, cfg), v_opts.json, out);
    };
  });

  std::vector<int> v_pair;
  auto* v_edge = verify->add_subcommand("lemma-edge", "Deleting a non-bridge edge raises lambda1");
  v_edge->add_option("--trials", v_trials, "Random trials");
  v_edge->add_option("--file", v_opts.file, "Check one graph instead of a campaign");
  v_edge->add_option("--format", v_opts.format)->check(CLI::IsMember({"el", "g6", "d6"}));
  v_edge->add_option("--edge", v_pair, "Edge u v (with --file)")->expected(2);
  add_run_flags(v_edge, v_opts);
  v_edge->callback([&] {
    action = [&] {
      if (v_opts.file.empty()) {
        return emit_campaign(edge_monotonicity_campaign(v_trials, v_opts.seed), v_opts.json, out);
      }
      if (v_pair.size() != 2) throw InvalidArgument("--edge u v is required with --file");
      const AnyGraph g = load(v_opts);
      if (!std::holds_alternative<Graph>(g)) throw InvalidArgument("lemma-edge expects an undirected graph");
      const bool holds = check_edge_monotonicity(std::get<Graph>(g), {v_pair[0], v_pair[1]}, {v_opts.tol});
      return emit_single("LEMMA-EDGE", holds, {{"edge", v_pair}}, v_opts.json, out);
    };
  });

  auto* v_arc = verify->add_subcommand("lemma-arc", "Adding an arc lowers lambda1");
  v_arc->add_option("--trials", v_trials, "Random trials");
  v_arc->add_option("--file", v_opts.file, "Check one digraph instead of a campaign");
  v_arc->add_option("--format", v_opts.format)->check(CLI::IsMember({"el", "g6", "d6"}));
  v_arc->add_option("--arc", v_pair, "Arc u v (with --file)")->expected(2);
  add_run_flags(v_arc, v_opts);
  v_arc->callback([&] {
    action = [&] {
      if (v_opts.file.empty()) {
        return emit_campaign(arc_monotonicity_campaign(v_trials, v_opts.seed), v_opts.json, out);
      }
      if (v_pair.size() != 2) throw InvalidArgument("--arc u v is required with --file");
      const AnyGraph g = load(v_opts);
      const Digraph d = std::holds_alternative<Digraph>(g) ? std::get<Digraph>(g)
                                                           : Digraph::symmetric_closure(std::get<Graph>(g));
      const bool holds = check_arc_monotonicity(d, {v_pair[0], v_pair[1]}, {v_opts.tol});
      return emit_single("LEMMA-ARC", holds, {{"arc", v_pair}}, v_opts.json, out);
    };
  });

  int b_s = 0, b_p = 2, b_max_s = 3, b_max_c = 3, b_max_order = 12;
  std::vector<int> b_parts;
  auto* v_balance = verify->add_subcommand("lemma-balance", "Balanced clique profiles minimise lambda1");
  v_balance->add_option("--s", b_s, "Join clique size (single check)");
  v_balance->add_option("--parts", b_parts, "Clique sizes, descending (single check)")->delimiter(',');
  v_balance->add_option("--p", b_p, "Smallest part size")->check(CLI::PositiveNumber);
  v_balance->add_option("--max-s", b_max_s, "Sweep bound on s");
  v_balance->add_option("--max-c", b_max_c, "Sweep bound on the number of parts");
  v_balance->add_option("--max-order", b_max_order, "Sweep bound on the total order");
  add_run_flags(v_balance, v_opts);
  v_balance->callback([&] {
    action = [&] {
      if (b_parts.empty()) {
        return emit_campaign(balancing_sweep(b_max_s, b_max_c, b_p, b_max_order), v_opts.json, out);
      }
      const auto check = check_balancing_lemma(b_s, b_parts, b_p, {v_opts.tol});
      return emit_single("LEMMA-BALANCE", check.holds,
                         {{"s", b_s},
                          {"parts", b_parts},
                          {"balanced", check.balanced},
                          {"equality", check.equality},
                          {"lambda_parts", check.lambda_parts},
                          {"lambda_balanced", check.lambda_balanced}},
                         v_opts.json, out);
    };
  });

  int f_min_gap = 5, f_max_gap = 50, f_max_k = 10;
  auto* v_f = verify->add_subcommand("lemma-f", "Discriminant excess is minimised at the endpoints");
  v_f->add_option("--n", v_n, "Single (n, k) check");
  v_f->add_option("--k", v_k, "Single (n, k) check");
  v_f->add_option("--min-gap", f_min_gap);
  v_f->add_option("--max-gap", f_max_gap);
  v_f->add_option("--max-k", f_max_k);
  add_run_flags(v_f, v_opts);
  v_f->callback([&] {
    action = [&] {
      if (v_n == 0) {
        return emit_campaign(discriminant_sweep(f_min_gap, f_max_gap, f_max_k), v_opts.json, out);
      }
      const auto argmin = discriminant_excess_argmin(v_n, v_k);
      const double low = discriminant_excess(2, v_n, v_k);
      const double high = discriminant_excess(v_n - v_k - 2, v_n, v_k);
      const double expected = 12.0 * v_n - 8.0 * v_k - 20.0;
      bool holds = low == expected && high == expected;
      for (int x : argmin) holds = holds && (x == 2 || x == v_n - v_k - 2);
      return emit_single("LEMMA-F", holds,
                         {{"n", v_n}, {"k", v_k}, {"argmin", argmin}, {"f_min", low}, {"expected", expected}},
                         v_opts.json, out);
    };
  });

  // convert ---------------------------------------------------------
  Common convert_opts;
  std::string convert_to;
  bool convert_canonical = false;
  auto* convert = app.add_subcommand("convert", "Convert between el, g6 and d6");
  add_input(convert, convert_opts);
  convert->add_option("--to", convert_to, "Output format")->required()->check(CLI::IsMember({"el", "g6", "d6"}));
  convert->add_flag("--canonical", convert_canonical, "Relabel canonically first");
  convert->callback([&] {
    action = [&] {
      AnyGraph g = load(convert_opts);
      if (convert_canonical) {
        std::visit([](auto& x) { x = canonical_representative(x); }, g);
      }
      std::string text = write_graph(g, parse_format_name(convert_to));
      out << text;
      if (text.empty() || text.back() != '\n') out << '\n';
      return kExitOk;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionInfeasible& e) {
    err << "construction infeasible: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotConnected& e) {
    err << "not connected: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace essspec::cli

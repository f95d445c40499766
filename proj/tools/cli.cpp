#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rtd/audit.hpp"
#include "rtd/constructions.hpp"
#include "rtd/errors.hpp"
#include "rtd/graph6.hpp"
#include "rtd/json_io.hpp"
#include "rtd/qp.hpp"
#include "rtd/report.hpp"
#include "rtd/rt_search.hpp"
#include "rtd/verify.hpp"

namespace rtd::cli {

namespace {

using nlohmann::json;

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_all(f);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

ColoredGraph parse_colored(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return colored_graph_from_json(j);
}

// Graph input is a graph6 line or a ColoredGraph JSON document.
Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_colored(text).underlying();
  const auto end = text.find('\n', first == std::string::npos ? 0 : first);
  return from_graph6(text.substr(first == std::string::npos ? 0 : first,
                                 end == std::string::npos ? std::string::npos
                                                          : end - first));
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

int emit_certificate(const Certificate& cert, std::ostream& out) {
  out << cert.to_json().dump(2) << '\n';
  return cert.passed() ? kOk : kCertificateFailed;
}

json property_json(const PropertyResult& p) {
  return {{"name", p.name},        {"description", p.description},
          {"measured", p.measured}, {"threshold", p.threshold},
          {"kind", p.upper_bound ? "upper" : "lower"},
          {"verdict", p.pass ? "pass" : "fail"},
          {"detail", p.detail}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey-Turan constructions, certificates and exact searches",
               "rtd"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::int64_t budget = 10'000'000;
  std::string input;
  std::function<int()> action;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input,
                    "ColoredGraph JSON file (default: stdin)");
  };

  // ---- construct -------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build graphs and colourings");
  construct->require_subcommand(1);
  std::string format = "json";
  std::string partition_out;
  std::string stats_out;

  int n = 60, d1 = -1, m2 = -1, d2 = -1;
  std::string delta_text;
  std::string variant = "figure";
  auto* kkl = construct->add_subcommand("kkl36", "(K3,K6)-free lower-bound construction");
  kkl->add_option("--n", n, "vertex count (divisible by 6)");
  kkl->add_option("--d1", d1, "degree planted in X1..X5");
  kkl->add_option("--m2", m2, "vertex count of F2");
  kkl->add_option("--d2", d2, "degree of F2");
  kkl->add_option("--delta", delta_text,
                  "derive d1, m2, d2 from delta (used when they are omitted)");
  kkl->add_option("--variant", variant, "colouring rule variant")
      ->check(CLI::IsMember({"text", "figure"}));
  kkl->add_option("--format", format)->check(CLI::IsMember({"json", "graph6"}));
  kkl->add_option("--partition-out", partition_out, "write X1..X6 as JSON");
  kkl->add_option("--stats-out", stats_out, "write construction stats as JSON");
  kkl->callback([&] {
    action = [&] {
      KklParams params;
      json plan_json = json::object();
      if (d1 < 0 || m2 < 0 || d2 < 0) {
        if (delta_text.empty())
          throw ArgumentError("give --d1 --m2 --d2 or --delta");
        const auto plan =
            plan_kkl_36(n, parse_rational(delta_text), parse_rule_variant(variant));
        params = plan.params;
        plan_json = {{"delta_n", plan.delta_n},
                     {"d1_shortfall", plan.d1_shortfall},
                     {"d2_shortfall", plan.d2_shortfall}};
      } else {
        params = {n, d1, m2, d2, parse_rule_variant(variant)};
      }
      const auto built = kkl_36(params);
      if (format == "graph6")
        out << to_graph6(built.graph.underlying()) << '\n';
      else
        out << to_json(built.graph).dump() << '\n';
      if (!partition_out.empty())
        write_file(partition_out, to_json(built.partition).dump() + "\n");
      if (!stats_out.empty()) {
        const auto& s = built.stats;
        json stats = {{"n", params.n},
                      {"d1", params.d1},
                      {"m2", params.m2},
                      {"d2", params.d2},
                      {"variant", to_string(params.variant)},
                      {"edges", s.edges},
                      {"turan_edges", s.turan_edges},
                      {"planted_edges", s.planted_edges},
                      {"inner_edges", s.inner_edges},
                      {"alpha", s.independence},
                      {"rule_edges", {s.rule1_edges, s.rule2_edges,
                                      s.rule3_edges, s.rule4_edges}},
                      {"clone_sets", built.sets},
                      {"plan", plan_json}};
        write_file(stats_out, stats.dump(2) + "\n");
      }
      return kOk;
    };
  });

  int c37_n = 40, c37_d = 2;
  std::string distance = "cyclic";
  auto* c37 = construct->add_subcommand("c37", "(K3,K7)-free construction on T(n,8)");
  c37->add_option("--n", c37_n, "vertex count (divisible by 8)");
  c37->add_option("--d", c37_d, "degree planted in every part");
  c37->add_option("--distance", distance)->check(CLI::IsMember({"cyclic", "literal"}));
  c37->add_option("--format", format)->check(CLI::IsMember({"json", "graph6"}));
  c37->add_option("--partition-out", partition_out, "write X1..X8 as JSON");
  c37->callback([&] {
    action = [&] {
      const auto built =
          construction_37(c37_n, c37_d, parse_distance_mode(distance));
      if (format == "graph6")
        out << to_graph6(built.graph.underlying()) << '\n';
      else
        out << to_json(built.graph).dump() << '\n';
      if (!partition_out.empty())
        write_file(partition_out, to_json(built.partition).dump() + "\n");
      return kOk;
    };
  });

  std::string plain_format = "graph6";
  auto emit_plain = [&](const Graph& g) {
    if (plain_format == "json")
      out << to_json(ColoredGraph::monochromatic(g, 1)).dump() << '\n';
    else
      out << to_graph6(g) << '\n';
    return kOk;
  };

  int t_n = 12, t_p = 6;
  auto* tur = construct->add_subcommand("turan", "Turan graph T(n,p)");
  tur->add_option("--n", t_n);
  tur->add_option("--p", t_p);
  tur->add_option("--format", plain_format)->check(CLI::IsMember({"json", "graph6"}));
  tur->callback([&] { action = [&] { return emit_plain(turan(t_n, t_p)); }; });

  int a_k = 2;
  auto* andr = construct->add_subcommand("andrasfai", "Andrasfai graph And(k)");
  andr->add_option("--k", a_k);
  andr->add_option("--format", plain_format)->check(CLI::IsMember({"json", "graph6"}));
  andr->callback([&] { action = [&] { return emit_plain(andrasfai(a_k)); }; });

  int f_m = 10, f_d = 4;
  auto* fg = construct->add_subcommand("fgraph", "triangle-free d-regular graph with alpha = d");
  fg->add_option("--m", f_m);
  fg->add_option("--d", f_d);
  fg->add_option("--format", plain_format)->check(CLI::IsMember({"json", "graph6"}));
  fg->callback([&] {
    action = [&] {
      const auto f = f_graph(f_m, f_d);
      err << "achieved degree " << f.degree << ", k=" << f.k << ", t=" << f.t
          << ", isolated=" << f.isolated << ", alpha=" << f.independence << '\n';
      return emit_plain(f.graph);
    };
  });

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Certify a coloured graph");
  verify->require_subcommand(1);
  int vp = 3, vq = 6, vm = 1;

  auto* free_cmd = verify->add_subcommand("free", "(K_p,K_q)-freeness");
  free_cmd->add_option("--p", vp);
  free_cmd->add_option("--q", vq);
  add_input(free_cmd);
  free_cmd->callback([&] {
    action = [&] {
      return emit_certificate(
          check_colored_free(parse_colored(read_input(input, in)), vp, vq), out);
    };
  });

  auto* wit = verify->add_subcommand("witness", "freeness plus alpha <= m");
  wit->add_option("--p", vp);
  wit->add_option("--q", vq);
  wit->add_option("--m", vm, "independence cap");
  add_input(wit);
  wit->callback([&] {
    action = [&] {
      return emit_certificate(
          check_rt_witness(parse_colored(read_input(input, in)), vp, vq, vm),
          out);
    };
  });

  std::string formula = "kkl36";
  std::string v_delta = "0";
  std::string tol = "0.02";
  auto* form = verify->add_subcommand("formula", "edge count against a density formula");
  form->add_option("--formula", formula, "kkl36 | c37");
  form->add_option("--delta", v_delta);
  form->add_option("--tol", tol, "tolerance as a fraction of n^2");
  add_input(form);
  form->callback([&] {
    action = [&] {
      return emit_certificate(
          edge_formula_check(parse_colored(read_input(input, in)),
                             parse_edge_formula(formula),
                             parse_rational(v_delta), parse_rational(tol)),
          out);
    };
  });

  double gamma = 0.2;
  std::string partition_file;
  auto* aud = verify->add_subcommand("audit", "evaluate P1..P8 on a 6-partition");
  aud->add_option("--gamma", gamma);
  aud->add_option("--partition", partition_file, "JSON array of six parts")
      ->required();
  add_input(aud);
  aud->callback([&] {
    action = [&] {
      const auto cg = parse_colored(read_input(input, in));
      std::ifstream pf(partition_file);
      if (!pf) throw std::runtime_error("cannot open " + partition_file);
      const auto part = partition_from_json(cg.n(), json::parse(pf));
      AuditConfig cfg;
      cfg.gamma = gamma;
      const auto report = audit_partition(cg, part, cfg);
      json props = json::array();
      bool all = true;
      for (const auto& p : report.properties) {
        props.push_back(property_json(p));
        all = all && p.pass;
      }
      out << json{{"n", report.n},
                  {"gamma", report.gamma},
                  {"assignment", report.assignment},
                  {"p2_qualifying_parts", report.p2_qualifying_parts},
                  {"properties", props},
                  {"p3_existential", property_json(report.p3_existential)},
                  {"status", all ? "pass" : "fail"}}
                 .dump(2)
          << '\n';
      return all ? kOk : kCertificateFailed;
    };
  });

  auto* census = verify->add_subcommand("census", "mono-triangle-free colourings of K5");
  census->callback([&] {
    action = [&] {
      const auto c = pentagonlike_census();
      out << to_json(c).dump() << '\n';
      return c.all_pentagonlike ? kOk : kCertificateFailed;
    };
  });

  std::string bip_c = "1/5";
  auto* bip = verify->add_subcommand("bipartition",
                                     "V1+V2 with small colour-wise alpha");
  bip->add_option("--c", bip_c, "alpha(G) <= c n");
  bip->add_option("--budget", budget);
  bip->add_option("--seed", seed);
  add_input(bip);
  bip->callback([&] {
    action = [&] {
      const auto r = bipartition_indep_search(
          parse_colored(read_input(input, in)), parse_rational(bip_c), budget, seed);
      json j = {{"bound", r.bound},
                {"evaluations", r.evaluations},
                {"exhaustive", r.exhaustive},
                {"found", r.found.has_value()}};
      if (r.found) {
        j["first"] = r.found->first;
        j["second"] = r.found->second;
        j["alpha_first"] = r.found->alpha_first;
        j["alpha_second"] = r.found->alpha_second;
      }
      out << j.dump(2) << '\n';
      return r.found ? kOk : kCertificateFailed;
    };
  });

  // ---- search ----------------------------------------------------------
  auto* search = app.add_subcommand("search", "Exact brute-force searches");
  search->require_subcommand(1);
  int sn = 5, sp = 3, sq = 3, sm = 1;

  auto* rt = search->add_subcommand("rt", "exact RT(n,p,q,m)");
  rt->add_option("--n", sn);
  rt->add_option("--p", sp);
  rt->add_option("--q", sq);
  rt->add_option("--m", sm);
  rt->add_option("--budget", budget);
  rt->callback([&] {
    action = [&] {
      RtInstance inst{sn, sp, sq, sm, budget};
      const auto r = rt_exact(inst);
      json j = {{"n", sn}, {"p", sp}, {"q", sq}, {"m", sm},
                {"value", r.value ? json(*r.value) : json(nullptr)},
                {"exhausted", r.exhausted},
                {"graphs_examined", r.graphs_examined},
                {"nodes", r.nodes}};
      int code = kOk;
      if (r.witness) {
        const auto cert = check_rt_witness(*r.witness, sp, sq, sm);
        j["witness"] = to_json(*r.witness);
        j["certificate"] = cert.to_json();
        if (!cert.passed()) code = kCertificateFailed;
      } else {
        j["witness"] = nullptr;
      }
      out << j.dump(2) << '\n';
      return code;
    };
  });

  std::string graph6_text;
  auto* col = search->add_subcommand("coloring", "(K_p,K_q)-free colouring of a graph");
  col->add_option("--p", sp);
  col->add_option("--q", sq);
  col->add_option("--budget", budget);
  col->add_option("--graph6", graph6_text, "graph6 line (otherwise --input/stdin)");
  add_input(col);
  col->callback([&] {
    action = [&] {
      const Graph g = graph6_text.empty() ? parse_graph(read_input(input, in))
                                          : from_graph6(graph6_text);
      const auto r = find_free_coloring(g, sp, sq, budget);
      json j = {{"found", r.coloring.has_value()},
                {"exhausted", r.exhausted},
                {"nodes", r.nodes}};
      j["coloring"] = r.coloring
                          ? to_json(ColoredGraph::from(g, *r.coloring))
                          : json(nullptr);
      out << j.dump(2) << '\n';
      return kOk;
    };
  });

  auto* ram = search->add_subcommand("ramsey", "does K_n admit a (K_p,K_q)-free colouring?");
  ram->add_option("--p", sp);
  ram->add_option("--q", sq);
  ram->add_option("--n", sn);
  ram->add_option("--budget", budget);
  ram->callback([&] {
    action = [&] {
      out << (ramsey_verify(sp, sq, sn, budget) ? "true" : "false") << '\n';
      return kOk;
    };
  });

  // ---- qp ---------------------------------------------------------------
  auto* qp = app.add_subcommand("qp", "Certified maxima of the quadratics f and g");
  qp->require_subcommand(1);
  auto* qf = qp->add_subcommand("f", "max of f over D_f");
  qf->callback([&] {
    action = [&] {
      const auto cert = maximize_f();
      json j = to_json(cert);
      j["function"] = "f";
      j["printed_point"] = to_json(printed_f_argmax());
      j["printed_point_value"] = to_fraction_string(eval_f(printed_f_argmax()));
      j["corrected_point"] = to_json(corrected_f_argmax());
      j["corrected_point_value"] =
          to_fraction_string(eval_f(corrected_f_argmax()));
      j["bound"] =
          "sum over colour-1 pairs in X6 <= (max f) * (delta' n')^2 with "
          "max f = " + to_fraction_string(cert.max_value);
      out << j.dump(2) << '\n';
      return kOk;
    };
  });
  auto* qg = qp->add_subcommand("g", "max of g over D_g");
  qg->callback([&] {
    action = [&] {
      const auto cert = maximize_g();
      json j = to_json(cert);
      j["function"] = "g";
      j["bound"] =
          "e(G'[X6]) <= 1/2 |X6| delta' n' + (max g) (delta' n')^2 with max g = " +
          to_fraction_string(cert.max_value);
      out << j.dump(2) << '\n';
      return kOk;
    };
  });

  // ---- report -----------------------------------------------------------
  auto* report = app.add_subcommand("report", "Reference densities and bound gaps");
  report->require_subcommand(1);
  std::vector<std::string> deltas;
  std::vector<int> s_values;
  auto* table = report->add_subcommand("table", "reference density table (CSV)");
  table->add_option("--deltas", deltas)->delimiter(',');
  table->add_option("--s", s_values, "single-clique rows for these s")->delimiter(',');
  table->callback([&] {
    action = [&] {
      const auto ds = parse_rational_list(deltas);
      out << to_csv(reference_table(s_values, ds));
      return kOk;
    };
  });
  auto* gaps = report->add_subcommand("gaps", "upper minus lower bound per delta (CSV)");
  gaps->add_option("--deltas", deltas)->delimiter(',')->required();
  gaps->callback([&] {
    action = [&] {
      out << to_csv(bound_gap_report(parse_rational_list(deltas)));
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  if (!action) {
    err << app.help();
    return kUsageError;
  }
  try {
    return action();
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << '\n';
    return kCertificateFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace rtd::cli

// cospec: exact construction and certification of cospectral signed graphs.
//
// Exit codes: 0 success, 1 domain rejection (inadmissible partition, graphs
// not cospectral under `verify`, instance too large), 2 usage or parse error.
// Machine output is a single JSON document on stdout; --verbose adds
// human-readable notes on stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cospec/ggm.hpp"
#include "cospec/gm.hpp"
#include "cospec/io.hpp"
#include "cospec/iso.hpp"
#include "cospec/search.hpp"
#include "cospec/signed_graph.hpp"
#include "cospec/spectrum.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cospec::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(buffer.str())));
  return hex;
}

json input_entry(const std::string& path) {
  return json{{"path", path}, {"fnv1a64", file_digest(path)}};
}

json poly_json(const cospec::CharPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(c.str());
  return coeffs;
}

json graph_json(const cospec::SignedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v, e.sign}));
  return json{{"n", g.order()}, {"m", g.edge_count()}, {"edges", edges},
              {"text", cospec::write_graph(g)}};
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw cospec::ParseError("bad entry '" + token + "' in comma-separated list");
    }
  }
  if (ids.empty()) throw cospec::ParseError("empty comma-separated list");
  return ids;
}

// Grammar: space-separated blocks, each "C:<ids>" or "D:<ids>", ids
// comma-separated, at most one D block.
cospec::GMPartition parse_gm_partition(const std::string& text) {
  cospec::GMPartition pi;
  bool seen_d = false;
  std::istringstream in(text);
  std::string block;
  while (in >> block) {
    if (block.rfind("C:", 0) == 0) {
      pi.c_parts.push_back(parse_id_list(block.substr(2)));
    } else if (block.rfind("D:", 0) == 0) {
      if (seen_d) throw cospec::ParseError("more than one D block");
      seen_d = true;
      pi.d_part = parse_id_list(block.substr(2));
    } else {
      throw cospec::ParseError("bad partition block '" + block + "' (expected C:... or D:...)");
    }
  }
  if (pi.c_parts.empty()) throw cospec::ParseError("partition needs at least one C block");
  return pi;
}

std::string partition_string(const cospec::GMPartition& pi) {
  std::ostringstream out;
  for (const auto& part : pi.c_parts) {
    out << "C:";
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
    out << " ";
  }
  if (!pi.d_part.empty()) {
    out << "D:";
    for (std::size_t i = 0; i < pi.d_part.size(); ++i) out << (i ? "," : "") << pi.d_part[i];
  }
  std::string s = out.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

json gm_partition_json(const cospec::GMPartition& pi) {
  return json{{"c_parts", pi.c_parts}, {"d_part", pi.d_part},
              {"string", partition_string(pi)}};
}

json ggm_partition_json(const cospec::GGMPartition& p) {
  return json{{"v1", p.v1}, {"v2", p.v2}, {"rest", p.rest}};
}

json gm_report_json(const cospec::GMPartition& pi, const cospec::GMAdmissibilityReport& report) {
  json cases = json::array();
  for (std::size_t k = 0; k < report.column_cases.size(); ++k)
    for (std::size_t i = 0; i < report.column_cases[k].size(); ++i)
      cases.push_back(json{{"vertex", pi.d_part[k]},
                           {"part", i + 1},
                           {"case", cospec::to_string(report.column_cases[k][i])}});
  json j{{"admissible", report.admissible},
         {"net_degree_table", report.net_degree_table},
         {"cases", cases}};
  if (!report.admissible) {
    j["violation"] = report.violation;
    j["offending"] = report.offending;
  }
  return j;
}

json ggm_report_json(const cospec::GGMPartition& p, const cospec::GGMAdmissibilityReport& report) {
  json cases = json::array();
  for (std::size_t k = 0; k < report.vertex_cases.size(); ++k)
    cases.push_back(json{{"vertex", p.rest[k]},
                         {"case", cospec::to_string(report.vertex_cases[k])}});
  json j{{"admissible", report.admissible}, {"ell", report.ell}, {"cases", cases}};
  if (!report.admissible) {
    j["violation"] = report.violation;
    j["offending"] = report.offending;
  }
  return j;
}

double default_budget() {
  if (const char* env = std::getenv("COSPEC_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw cospec::ParseError("COSPEC_BUDGET_SECS is not a number");
    }
  }
  return 30.0;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Non-isomorphism certification used by `pipeline`. Brute force below the
// iso cap, cheap switching-invariant disqualifiers above it.
struct IsoVerdict {
  std::string status;  // "isomorphic" | "non_isomorphic" | "unknown"
  std::string method;
  std::optional<cospec::SwitchIsoCertificate> certificate;
};

IsoVerdict certify_non_isomorphic(const cospec::SignedGraph& a, const cospec::SignedGraph& b) {
  if (a.order() <= cospec::kIsoMaxOrder) {
    auto cert = cospec::are_switching_isomorphic(a, b);
    if (cert) return {"isomorphic", "exhaustive", std::move(cert)};
    return {"non_isomorphic", "exhaustive", std::nullopt};
  }
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return {"non_isomorphic", "underlying_degree_sequence", std::nullopt};
  if (!cospec::cospectral(cospec::underlying_graph(a), cospec::underlying_graph(b)))
    return {"non_isomorphic", "underlying_charpoly", std::nullopt};
  return {"unknown", "none", std::nullopt};
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const std::string& file, bool verbose) {
  json out{{"command", "spectrum"}, {"inputs", json::array({input_entry(file)})}};
  const cospec::SignedGraph g = cospec::load_graph_file(file);
  const cospec::CharPoly p = cospec::char_poly(g);
  out["n"] = g.order();
  out["char_poly"] = poly_json(p);
  out["eigenvalues_approx"] = cospec::eigenvalues_approx(cospec::adjacency_matrix(g));
  if (verbose) std::cerr << "p(x) = " << cospec::to_string(p) << "\n";
  emit(out);
  return kExitOk;
}

int cmd_gm(const std::string& file, const std::string& partition_text,
           const std::string& out_file, bool verbose) {
  const cospec::GMPartition pi = parse_gm_partition(partition_text);
  json out{{"command", "gm"}, {"inputs", json::array({input_entry(file)})}};
  const cospec::SignedGraph g = cospec::load_graph_file(file);
  const auto report = cospec::validate_gm(g, pi);
  out.update(gm_report_json(pi, report));
  if (!report.admissible) {
    if (verbose) std::cerr << "not admissible: " << report.violation << "\n";
    emit(out);
    return kExitRejected;
  }
  const cospec::SignedGraph h = cospec::gm_switch(g, pi);
  out["switched_graph"] = graph_json(h);
  out["char_poly"] = poly_json(cospec::char_poly(g));
  out["cospectral"] = cospec::cospectral(g, h);
  out["conjugation_verified"] = cospec::verify_conjugation_gm(g, pi);
  if (!out_file.empty())
    cospec::save_graph_file(h, out_file, {"gm switch of " + file, partition_string(pi)});
  if (verbose) std::cerr << "admissible; switched graph has " << h.edge_count() << " edges\n";
  emit(out);
  return kExitOk;
}

int cmd_ggm(const std::string& file, const std::string& v1_text, const std::string& v2_text,
            const std::string& out_file, bool verbose) {
  json out{{"command", "ggm"}, {"inputs", json::array({input_entry(file)})}};
  const cospec::SignedGraph g = cospec::load_graph_file(file);
  const cospec::GGMPartition p =
      cospec::ggm_partition(g.order(), parse_id_list(v1_text), parse_id_list(v2_text));
  out["partition"] = ggm_partition_json(p);
  const auto report = cospec::validate_ggm(g, p);
  out.update(ggm_report_json(p, report));
  if (!report.admissible) {
    if (verbose) std::cerr << "not admissible: " << report.violation << "\n";
    emit(out);
    return kExitRejected;
  }
  const cospec::SignedGraph h = cospec::ggm_switch(g, p);
  out["switched_graph"] = graph_json(h);
  out["char_poly"] = poly_json(cospec::char_poly(g));
  out["cospectral"] = cospec::cospectral(g, h);
  out["conjugation_verified"] = cospec::verify_conjugation_ggm(g, p);
  if (!out_file.empty())
    cospec::save_graph_file(h, out_file, {"ggm switch of " + file});
  if (verbose) std::cerr << "admissible with ell = " << report.ell << "\n";
  emit(out);
  return kExitOk;
}

int cmd_search(const std::string& mode, const std::string& file,
               const cospec::SearchLimits& limits, bool include_trivial, bool verbose) {
  json out{{"command", "search " + mode}, {"inputs", json::array({input_entry(file)})}};
  const cospec::SignedGraph g = cospec::load_graph_file(file);
  json found = json::array();
  bool truncated = false;
  if (mode == "gm") {
    const auto result = cospec::find_gm_partitions(g, limits, include_trivial);
    truncated = result.truncated;
    for (const auto& pi : result.found) found.push_back(gm_partition_json(pi));
  } else {
    const auto result = cospec::find_ggm_partitions(g, limits, include_trivial);
    truncated = result.truncated;
    for (const auto& p : result.found) {
      json j = ggm_partition_json(p);
      j["ell"] = cospec::validate_ggm(g, p).ell;
      found.push_back(std::move(j));
    }
  }
  out["count"] = found.size();
  out["truncated"] = truncated;
  out["partitions"] = std::move(found);
  if (verbose)
    std::cerr << "found " << out["count"] << " admissible nontrivial partition(s)"
              << (truncated ? " (truncated)" : "") << "\n";
  emit(out);
  return kExitOk;
}

int cmd_gen(const std::string& mode, std::uint64_t seed, const std::string& parts_text, int m,
            int d_size, double density, double bias, const std::string& out_file, bool verbose) {
  json out{{"command", "gen " + mode}, {"seed", seed}};
  cospec::SignedGraph g;
  std::vector<std::string> comments;
  if (mode == "gm") {
    cospec::GMGenParams params;
    params.part_sizes = parse_id_list(parts_text);
    params.d_size = d_size;
    params.edge_density = density;
    params.sign_bias = bias;
    auto [graph, pi] = cospec::generate_gm_instance(seed, params);
    g = std::move(graph);
    out["partition"] = gm_partition_json(pi);
    comments = {"generated gm instance, seed " + std::to_string(seed),
                "partition " + partition_string(pi)};
  } else {
    cospec::GGMGenParams params;
    params.m = m;
    params.d_size = d_size;
    params.edge_density = density;
    params.sign_bias = bias;
    auto [graph, p] = cospec::generate_ggm_instance(seed, params);
    g = std::move(graph);
    out["partition"] = ggm_partition_json(p);
    std::ostringstream v1s, v2s;
    for (std::size_t i = 0; i < p.v1.size(); ++i) v1s << (i ? "," : "") << p.v1[i];
    for (std::size_t i = 0; i < p.v2.size(); ++i) v2s << (i ? "," : "") << p.v2[i];
    comments = {"generated ggm instance, seed " + std::to_string(seed),
                "v1 " + v1s.str() + "  v2 " + v2s.str()};
  }
  out["graph"] = graph_json(g);
  if (!out_file.empty()) {
    cospec::save_graph_file(g, out_file, comments);
    out["written"] = out_file;
  }
  if (verbose) std::cerr << "generated n = " << g.order() << ", m = " << g.edge_count() << "\n";
  emit(out);
  return kExitOk;
}

int cmd_iso(const std::string& file_a, const std::string& file_b, bool underlying_only,
            bool verbose) {
  json out{{"command", "iso"},
           {"inputs", json::array({input_entry(file_a), input_entry(file_b)})}};
  const cospec::SignedGraph a = cospec::load_graph_file(file_a);
  const cospec::SignedGraph b = cospec::load_graph_file(file_b);
  if (underlying_only) {
    out["underlying"] = true;
    out["isomorphic"] = cospec::underlying_isomorphic(a, b);
  } else {
    out["underlying"] = false;
    const auto cert = cospec::are_switching_isomorphic(a, b);
    out["isomorphic"] = cert.has_value();
    if (cert)
      out["certificate"] = json{{"perm", cert->perm}, {"u_set", cert->u_set}};
  }
  if (verbose) std::cerr << (out["isomorphic"].get<bool>() ? "" : "not ") << "isomorphic\n";
  emit(out);
  return kExitOk;
}

int cmd_verify(const std::string& file_a, const std::string& file_b, bool verbose) {
  json out{{"command", "verify"},
           {"inputs", json::array({input_entry(file_a), input_entry(file_b)})}};
  const cospec::SignedGraph a = cospec::load_graph_file(file_a);
  const cospec::SignedGraph b = cospec::load_graph_file(file_b);
  const cospec::CharPoly pa = cospec::char_poly(a);
  const cospec::CharPoly pb = cospec::char_poly(b);
  const bool same = (a.order() == b.order()) && (pa == pb);
  out["a"] = json{{"n", a.order()}, {"char_poly", poly_json(pa)}};
  out["b"] = json{{"n", b.order()}, {"char_poly", poly_json(pb)}};
  out["cospectral"] = same;
  if (verbose) {
    std::cerr << "p_a(x) = " << cospec::to_string(pa) << "\n";
    std::cerr << "p_b(x) = " << cospec::to_string(pb) << "\n";
  }
  emit(out);
  return same ? kExitOk : kExitRejected;
}

int cmd_pipeline(const std::string& mode, const std::string& file,
                 const cospec::SearchLimits& limits, bool verbose) {
  json out{{"command", "pipeline " + mode}, {"inputs", json::array({input_entry(file)})}};
  const cospec::SignedGraph g = cospec::load_graph_file(file);

  json pings = json::array();
  json candidates = json::array();
  bool truncated = false;

  auto process = [&](const json& partition, const cospec::SignedGraph& h, json extra) {
    json item{{"partition", partition}};
    item.update(extra);
    item["cospectral"] = cospec::cospectral(g, h);
    const IsoVerdict verdict = certify_non_isomorphic(g, h);
    item["switching_isomorphic"] = verdict.status;
    item["iso_method"] = verdict.method;
    if (item["cospectral"].get<bool>() && verdict.status == "non_isomorphic") {
      json ping = item;
      ping["char_poly"] = poly_json(cospec::char_poly(g));
      ping["switched_graph"] = graph_json(h);
      pings.push_back(std::move(ping));
    }
    candidates.push_back(std::move(item));
  };

  if (mode == "gm") {
    const auto result = cospec::find_gm_partitions(g, limits);
    truncated = result.truncated;
    for (const auto& pi : result.found)
      process(gm_partition_json(pi), cospec::gm_switch(g, pi),
              json{{"conjugation_verified", cospec::verify_conjugation_gm(g, pi)}});
  } else {
    const auto result = cospec::find_ggm_partitions(g, limits);
    truncated = result.truncated;
    for (const auto& p : result.found)
      process(ggm_partition_json(p), cospec::ggm_switch(g, p),
              json{{"ell", cospec::validate_ggm(g, p).ell},
                   {"conjugation_verified", cospec::verify_conjugation_ggm(g, p)}});
  }

  out["candidates"] = candidates.size();
  out["truncated"] = truncated;
  out["results"] = std::move(candidates);
  out["pings"] = std::move(pings);
  if (verbose)
    std::cerr << "candidates: " << out["candidates"] << ", pings: " << out["pings"].size()
              << "\n";
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cospectral signed graph constructions (GM and generalized GM switching)"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "human-readable notes on stderr");

  std::string file, file_b, partition_text, v1_text, v2_text, out_file;
  std::string parts_text = "4,4";
  std::uint64_t seed = 1;
  int m = 3, d_size = 2;
  double density = 0.5, bias = 0.5;
  cospec::SearchLimits limits;

  auto* spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial of a graph");
  spectrum->add_option("graph", file)->required();

  auto* gm = app.add_subcommand("gm", "apply a GM switching partition");
  gm->add_option("graph", file)->required();
  gm->add_option("--partition", partition_text, "e.g. \"C:0,1,2 C:3,4,5,6 D:7\"")->required();
  gm->add_option("-o,--output", out_file, "write the switched graph here");

  auto* ggm = app.add_subcommand("ggm", "apply a generalized GM switching");
  ggm->add_option("graph", file)->required();
  ggm->add_option("--v1", v1_text, "comma-separated V_1")->required();
  ggm->add_option("--v2", v2_text, "comma-separated V_2")->required();
  ggm->add_option("-o,--output", out_file, "write the switched graph here");

  auto* search = app.add_subcommand("search", "find admissible partitions");
  std::string mode;
  search->add_option("mode", mode)->check(CLI::IsMember({"gm", "ggm"}))->required();
  search->add_option("graph", file)->required();
  bool include_trivial = false;
  double budget = -1;
  search->add_option("--t-max", limits.t_max, "max number of C parts");
  search->add_option("--budget", budget, "time budget in seconds");
  search->add_option("--cap", limits.candidate_cap, "max results");
  search->add_flag("--include-trivial", include_trivial, "keep identity switchings");
  search->add_flag("--json", "machine output (always on; accepted for compatibility)");

  auto* gen = app.add_subcommand("gen", "generate a random admissible instance");
  gen->add_option("mode", mode)->check(CLI::IsMember({"gm", "ggm"}))->required();
  gen->add_option("--seed", seed);
  gen->add_option("--parts", parts_text, "gm part sizes, e.g. 4,4");
  gen->add_option("--m", m, "ggm side size");
  gen->add_option("--d", d_size, "size of D / rest");
  gen->add_option("--density", density);
  gen->add_option("--bias", bias, "probability that an edge is positive");
  gen->add_option("-o,--output", out_file, "write the generated graph here");

  auto* iso = app.add_subcommand("iso", "decide switching isomorphism");
  iso->add_option("graph-a", file)->required();
  iso->add_option("graph-b", file_b)->required();
  bool underlying_only = false;
  iso->add_flag("--underlying", underlying_only, "plain isomorphism of underlying graphs");

  auto* verify = app.add_subcommand("verify", "compare characteristic polynomials");
  verify->add_option("graph-a", file)->required();
  verify->add_option("graph-b", file_b)->required();

  auto* pipeline = app.add_subcommand("pipeline", "search, switch, verify and certify");
  pipeline->add_option("mode", mode)->check(CLI::IsMember({"gm", "ggm"}))->required();
  pipeline->add_option("graph", file)->required();
  pipeline->add_option("--t-max", limits.t_max);
  pipeline->add_option("--budget", budget);
  pipeline->add_option("--cap", limits.candidate_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;  // --help and --version exit 0
  }

  try {
    limits.time_budget_secs = budget > 0 ? budget : default_budget();

    if (*spectrum) return cmd_spectrum(file, verbose);
    if (*gm) return cmd_gm(file, partition_text, out_file, verbose);
    if (*ggm) return cmd_ggm(file, v1_text, v2_text, out_file, verbose);
    if (*search) return cmd_search(mode, file, limits, include_trivial, verbose);
    if (*gen) return cmd_gen(mode, seed, parts_text, m, d_size, density, bias, out_file, verbose);
    if (*iso) return cmd_iso(file, file_b, underlying_only, verbose);
    if (*verify) return cmd_verify(file, file_b, verbose);
    if (*pipeline) return cmd_pipeline(mode, file, limits, verbose);
  } catch (const cospec::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cospec::SelfLoop& e) {
    std::cerr << "bad graph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cospec::DuplicateEdge& e) {
    std::cerr << "bad graph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cospec::VertexOutOfRange& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cospec::Error& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}

#include "oideal/cli.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oideal/decomposition.hpp"
#include "oideal/fixtures.hpp"
#include "oideal/json_io.hpp"
#include "oideal/unmixed.hpp"

namespace oideal {

namespace {

std::string render_set(const WeightedOrientedGraph& g, Mask m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_indices(m)) {
    if (!first) s += ",";
    s += g.name(v);
    first = false;
  }
  return s + "}";
}

std::string render_cover_line(const WeightedOrientedGraph& g, const CoverAnalysis& a) {
  std::string s = render_set(g, a.cover);
  s += a.is_minimal ? "  minimal" : "  non-minimal";
  s += a.is_strong ? " strong" : " weak";
  s += "  L1=" + render_set(g, a.l1) + " L2=" + render_set(g, a.l2) +
       " L3=" + render_set(g, a.l3);
  for (auto [x, y] : a.strong_witness)
    s += "  witness[" + g.name(x) + "]=" + g.name(y);
  return s;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_decompose(const WeightedOrientedGraph& g, bool verify, int cap, bool json,
                  std::ostream& out, bool full_report) {
  bool do_verify = verify || g.size() <= 8;
  auto report = strong_cover_decomposition(g, do_verify, cap);
  if (json) {
    print_json(out, decomposition_to_json(g, report));
    return 0;
  }
  out << "I(D) = " << render_ideal_cas(report.edge_ideal, g.names()) << "\n";
  std::string joined;
  for (const auto& [cover, q] : report.components) {
    if (!joined.empty()) joined += " ∩ ";
    joined += render_component(q, g.names());
  }
  out << "I(D) = " << (joined.empty() ? "(0)" : joined) << "\n";
  if (full_report)
    for (const auto& [cover, q] : report.components)
      out << render_component(q, g.names()) << "  C = " << render_cover_line(g, cover) << "\n";
  if (report.verified) out << "verified = " << (*report.verified ? "true" : "false") << "\n";
  return 0;
}

int cmd_ass(const WeightedOrientedGraph& g, int cap, bool json, std::ostream& out) {
  auto primes = associated_primes(g, cap);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (Mask p : primes) arr.push_back(vertex_set_to_json(g, p));
    print_json(out, {{"ass", arr}});
    return 0;
  }
  for (Mask p : primes) out << render_set(g, p) << "\n";
  return 0;
}

int cmd_unmixed(const WeightedOrientedGraph& g, int cap, bool json, std::ostream& out) {
  auto r = is_unmixed(g, cap);
  bool ms = has_minimal_strong_property(g, cap);
  if (json) {
    print_json(out, unmixed_to_json(g, r, ms));
    return 0;
  }
  out << "unmixed = " << (r.unmixed ? "true" : "false") << "\n";
  out << "minimal_strong = " << (ms ? "true" : "false") << "\n";
  out << "criteria: strong_cardinality=" << (r.criterion_strong_cardinality ? "true" : "false")
      << " graph_unmixed_and_l3=" << (r.criterion_graph_unmixed_and_l3 ? "true" : "false")
      << " minimal_strong_and_g=" << (r.criterion_minimal_strong_and_g ? "true" : "false")
      << "\n";
  if (r.size_mismatch)
    out << "strong covers of different sizes: " << render_set(g, r.size_mismatch->first) << " "
        << render_set(g, r.size_mismatch->second) << "\n";
  else if (r.nonminimal_strong_cover)
    out << "non-minimal strong cover: " << render_set(g, *r.nonminimal_strong_cover) << "\n";
  return 0;
}

int cmd_covers(const WeightedOrientedGraph& g, int cap, bool json, std::ostream& out) {
  auto covers = enumerate_strong_covers(g, cap);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : covers) arr.push_back(cover_to_json(g, a));
    print_json(out, {{"strong_covers", arr}});
    return 0;
  }
  for (const auto& a : covers) out << render_cover_line(g, a) << "\n";
  return 0;
}

void print_characterization(std::ostream& out, const std::string& label,
                            const CharacterizationResult& r) {
  out << label << ": verdict=" << (r.verdict ? "true" : "false") << "  clause: " << r.clause;
  if (!r.witness.empty()) {
    out << "  witness:";
    for (const auto& w : r.witness) out << " " << w;
  }
  out << "\n";
}

int cmd_characterize(const WeightedOrientedGraph& g, bool json, std::ostream& out) {
  auto shape = classify_shape(g);
  std::vector<std::pair<std::string, CharacterizationResult>> results;
  if (shape.whisker) results.emplace_back("whisker", characterize_whisker(g));
  if (shape.cycle) results.emplace_back("cycle", characterize_cycle(g));
  if (shape.bipartite) results.emplace_back("bipartite", characterize_bipartite(g));
  if (json) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [label, r] : results) obj[label] = characterization_to_json(r);
    print_json(out, obj);
    return 0;
  }
  if (results.empty()) {
    out << "no closed-form characterization applies\n";
    return 0;
  }
  for (const auto& [label, r] : results) print_characterization(out, label, r);
  return 0;
}

int cmd_verify(const WeightedOrientedGraph& g, int cap, bool json, std::ostream& out) {
  auto report = strong_cover_decomposition(g, /*verify=*/true, cap);
  if (json) {
    print_json(out, {{"verified", report.verified.value_or(false)},
                     {"components", report.components.size()}});
    return 0;
  }
  out << "components = " << report.components.size() << "\n";
  out << "verified = " << (report.verified.value_or(false) ? "true" : "false") << "\n";
  return 0;
}

int cmd_cm(const WeightedOrientedGraph& g, int cap, bool json, std::ostream& out) {
  auto shape = classify_shape(g);
  if (shape.path || shape.complete) {
    auto r = shape.path ? cm_path(g) : cm_complete(g);
    if (json) {
      nlohmann::json j = characterization_to_json(r);
      j["cm"] = r.verdict;
      print_json(out, j);
    } else {
      out << "cm = " << (r.verdict ? "true" : "false") << "\n";
      print_characterization(out, shape.path ? "path" : "complete", r);
    }
    return 0;
  }
  auto r = is_unmixed(g, cap);
  bool ms = has_minimal_strong_property(g, cap);
  if (json) {
    print_json(out, {{"cm", "requires external CAS"},
                     {"unmixed", r.unmixed},
                     {"minimal_strong", ms}});
    return 0;
  }
  out << "cm: requires external CAS\n";
  out << "unmixed = " << (r.unmixed ? "true" : "false") << "\n";
  out << "minimal_strong = " << (ms ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible decompositions of edge ideals of weighted oriented graphs"};
  app.name("oideal");

  std::string command, input, fixture_name, format = "text";
  bool verify = false;
  int max_n = -1;

  static const std::set<std::string> kCommands{"decompose", "ass",    "unmixed", "covers",
                                              "characterize", "verify", "cm"};
  app.add_option("command", command, "decompose|ass|unmixed|covers|characterize|verify|cm")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("input", input, "graph JSON file");
  app.add_option("--fixture", fixture_name, "built-in graph (example1, example2, ...)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verify", verify, "cross-check the decomposition against the oracle");
  app.add_option("--max-n", max_n, "override the vertex-count cap for enumeration");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (input.empty() == fixture_name.empty())
      fail(errc::parse_error, "provide exactly one of an input file or --fixture");
    WeightedOrientedGraph g =
        fixture_name.empty() ? load_graph(input) : fixture(fixture_name);

    int cap = kStrongCoverCap;
    if (const char* env = std::getenv("ORIENTED_IDEAL_MAX_N")) {
      try {
        cap = std::stoi(env);
      } catch (const std::exception&) {
        fail(errc::parse_error, "ORIENTED_IDEAL_MAX_N is not an integer");
      }
    }
    if (max_n > 0) cap = max_n;

    bool json = format == "json";
    if (command == "decompose") return cmd_decompose(g, verify, cap, json, out, true);
    if (command == "ass") return cmd_ass(g, cap, json, out);
    if (command == "unmixed") return cmd_unmixed(g, cap, json, out);
    if (command == "covers") return cmd_covers(g, cap, json, out);
    if (command == "characterize") return cmd_characterize(g, json, out);
    if (command == "verify") return cmd_verify(g, cap, json, out);
    return cmd_cm(g, cap, json, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::size_cap ? 3 : 2;
  }
}

}  // namespace oideal

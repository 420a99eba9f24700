#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "staircase/bruhat.hpp"
#include "staircase/dl.hpp"
#include "staircase/dominant.hpp"
#include "staircase/error.hpp"
#include "staircase/identities.hpp"
#include "staircase/shapes.hpp"

namespace staircase::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string format = "text";
  std::optional<int> degree;
  std::size_t max_corners = 4;
  int max_weight = 6;
  unsigned jobs = 0;
  std::string out_dir;
};

Partition parse_partition(const std::string& text) {
  const Composition c(parse_int_list(text));
  if (!c.is_weakly_decreasing()) throw ParseError("lambda must be weakly decreasing: " + text);
  return Partition(c.entries());
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw ParseError("format '" + cfg.format + "' is not available for this command");
}

json to_json(const Composition& c) { return c.entries(); }
json to_json(Cell c) { return json::array({c.row, c.col}); }

json to_json(const VerificationReport& r) {
  json j = {{"identity", r.identity}, {"shape", r.shape},       {"parameter", r.parameter},
            {"status", to_string(r.status)}, {"checked", r.checked}, {"seconds", r.seconds},
            {"notes", r.notes}};
  if (r.discrepancy) {
    j["discrepancy"] = {{"monomial", r.discrepancy->monomial.to_string()},
                        {"lhs", r.discrepancy->lhs.get_str()},
                        {"rhs", r.discrepancy->rhs.get_str()},
                        {"context", r.context}};
  }
  return j;
}

json to_json(const SweepInstance& s) {
  return {{"shape", s.shape},
          {"lambda", s.lambda},
          {"size", s.size},
          {"regular", s.regular},
          {"graded", s.graded},
          {"mobius_min", s.mobius_min},
          {"mobius_max", s.mobius_max},
          {"el_printed_order", s.el_printed_order},
          {"el_shellable", s.el_shellable},
          {"el_search_complete", s.el_search_complete},
          {"mobius_formula_checked", s.mobius_formula_checked},
          {"mobius_formula_ok", s.mobius_formula_ok},
          {"order_agreement", s.order_agreement}};
}

void write_file(const Config& cfg, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream f(std::filesystem::path(cfg.out_dir) / name);
  if (!f) throw DomainError("cannot write " + name + " in " + cfg.out_dir);
  f << body;
}

// Hasse diagram as text, JSON or DOT.
void emit_poset(std::ostream& out, const Config& cfg, const FinitePoset& p,
                const std::vector<std::string>& names, const DotOptions& dot) {
  if (cfg.format == "dot") {
    out << to_dot(p, names, dot);
    return;
  }
  const auto& covers = p.covers();
  if (cfg.format == "json") {
    json edges = json::array();
    for (std::size_t e = 0; e < covers.size(); ++e) {
      json edge = {{"from", names[covers[e].first]}, {"to", names[covers[e].second]}};
      if (!dot.edge_labels.empty()) edge["label"] = dot.edge_labels[e];
      edges.push_back(edge);
    }
    json j = {{"elements", names}, {"covers", edges}};
    if (!dot.highlighted.empty()) {
      json marked = json::array();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (dot.highlighted[i]) marked.push_back(names[i]);
      j["highlighted"] = marked;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "elements " << names.size() << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "  " << names[i];
    if (!dot.highlighted.empty() && dot.highlighted[i]) out << " *";
    out << "\n";
  }
  out << "covers " << covers.size() << "\n";
  for (std::size_t e = 0; e < covers.size(); ++e) {
    out << "  " << names[covers[e].first] << " < " << names[covers[e].second];
    if (!dot.edge_labels.empty()) out << " " << dot.edge_labels[e];
    out << "\n";
  }
}

int cmd_corners(std::ostream& out, const Config& cfg, const std::string& shape_text) {
  const CornerPoset cp = staircase_corners(parse_shape(shape_text));
  std::vector<std::string> names;
  for (Cell c : cp.corners()) names.push_back(c.to_string());
  if (cfg.format == "dot") {
    DotOptions opt;
    opt.graph_name = "corners";
    out << to_dot(cp.poset(), names, opt);
  } else if (cfg.format == "json") {
    json corners = json::array(), edges = json::array();
    for (Cell c : cp.corners()) corners.push_back(to_json(c));
    for (auto [a, b] : cp.poset().covers())
      edges.push_back(json::array({to_json(cp.corners()[a]), to_json(cp.corners()[b])}));
    out << json{{"heights", cp.shape().heights()}, {"corners", corners}, {"hasse", edges}}.dump(2) << "\n";
  } else {
    out << "shape " << cp.shape().to_string() << "\n";
    out << "corners";
    for (const auto& n : names) out << " " << n;
    out << "\ncovers";
    for (auto [a, b] : cp.poset().covers()) out << " " << names[a] << "<" << names[b];
    out << "\n";
  }
  return 0;
}

int cmd_hasse(std::ostream& out, const Config& cfg, const std::string& shape_text,
              const std::string& lambda_text, bool orbit) {
  const StaircaseShape shape = parse_shape(shape_text);
  if (lambda_text.empty()) {
    if (orbit) throw ParseError("--orbit needs lambda");
    const CornerPoset cp = staircase_corners(shape);
    std::vector<std::string> names;
    for (Cell c : cp.corners()) names.push_back(c.to_string());
    DotOptions opt;
    opt.graph_name = "corners";
    emit_poset(out, cfg, cp.poset(), names, opt);
    return 0;
  }
  const DLPoset dl(shape, parse_partition(lambda_text));
  if (orbit) {
    // Full orbit on the columns with the dominant weights filled.
    const Orbit o(dl.lambda(), shape.columns());
    std::vector<std::string> names;
    DotOptions opt;
    opt.graph_name = "orbit";
    for (const Composition& c : o.elements()) {
      names.push_back(c.to_string());
      opt.highlighted.push_back(dl.index_of_vrt(c).has_value());
    }
    for (Transposition t : o.labels()) opt.edge_labels.push_back(t.to_string());
    emit_poset(out, cfg, o.poset(), names, opt);
    return 0;
  }
  if (cfg.format == "dot") {
    out << dl_to_dot(dl);
    return 0;
  }
  std::vector<std::string> names;
  for (const DLArray& a : dl.arrays()) names.push_back(a.to_string());
  DotOptions opt;
  opt.graph_name = "dl";
  for (Transposition t : dl.labels()) opt.edge_labels.push_back(t.to_string());
  emit_poset(out, cfg, dl.poset(), names, opt);
  return 0;
}

int cmd_dl(std::ostream& out, const Config& cfg, const std::string& shape_text,
           const std::string& lambda_text) {
  const DLPoset dl(parse_shape(shape_text), parse_partition(lambda_text));
  if (cfg.format == "dot") {
    out << dl_to_dot(dl);
    return 0;
  }
  const PropertyReport pr = property_report(dl.vertical());
  const std::size_t linext = count_linear_extensions(dl.corners().poset());
  if (cfg.format == "json") {
    json arrays = json::array();
    for (const DLArray& a : dl.arrays()) {
      json cells = json::array();
      for (std::size_t i = 0; i < a.values().size(); ++i) {
        const Cell c = dl.corners().corners()[i];
        cells.push_back(json::array({c.row, c.col, a.values()[i]}));
      }
      arrays.push_back({{"shape", dl.shape().heights()},
                        {"values", cells},
                        {"hor", to_json(a.hor())},
                        {"vrt", to_json(a.vrt())}});
    }
    json cert = json::array();
    for (Transposition t : pr.el_certificate) cert.push_back(t.to_string());
    out << json{{"shape", dl.shape().to_string()},
                {"lambda", dl.lambda().to_string()},
                {"size", dl.size()},
                {"arrays", arrays},
                {"linear_extensions", linext},
                {"regular", pr.regular},
                {"bounded", pr.bounded},
                {"graded", pr.graded},
                {"thin", pr.thin},
                {"subthin", pr.subthin},
                {"el_printed_order", pr.el_printed_order.ok},
                {"el_shellable", pr.el_shellable},
                {"el_certificate", cert},
                {"mobius_min", pr.mobius_min},
                {"mobius_max", pr.mobius_max}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "shape " << dl.shape().to_string() << " lambda " << dl.lambda().to_string() << " size "
      << dl.size() << "\n";
  for (const DLArray& a : dl.arrays())
    out << "  " << a.to_string() << "  hor " << a.hor().to_string() << " vrt " << a.vrt().to_string()
        << "\n";
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "linear extensions of corners " << linext << "\n";
  out << "regular " << yes(pr.regular) << ", bounded " << yes(pr.bounded) << ", graded "
      << yes(pr.graded) << ", thin " << yes(pr.thin) << ", subthin " << yes(pr.subthin) << "\n";
  out << "EL (printed label order) " << yes(pr.el_printed_order.ok) << ", EL-shellable "
      << yes(pr.el_shellable);
  if (!pr.el_certificate.empty()) {
    out << " via";
    for (Transposition t : pr.el_certificate) out << " " << t.to_string();
  }
  out << "\nmobius range [" << pr.mobius_min << "," << pr.mobius_max << "]\n";
  return 0;
}

AntilinearizedPoset read_poset_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read poset file " + path);
  json j;
  try {
    f >> j;
    const auto m = j.at("m").get<std::size_t>();
    const auto elements = j.at("elements").get<std::vector<int>>();
    const auto covers = j.at("covers").get<std::vector<std::pair<int, int>>>();
    return AntilinearizedPoset::from_slots(m, elements, covers);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad poset file: ") + e.what());
  }
}

int cmd_bsort(std::ostream& out, const Config& cfg, const std::vector<std::string>& positional,
              bool use_example, const std::string& poset_file) {
  require_format(cfg, {"text", "json"});
  const std::size_t expected = (use_example || !poset_file.empty()) ? 1 : 2;
  if (use_example && !poset_file.empty()) throw ParseError("--example-arbor and --poset exclude each other");
  if (positional.size() != expected)
    throw ParseError(expected == 1 ? "bsort expects one composition" : "bsort expects SHAPE COMPOSITION");
  const AntilinearizedPoset base = use_example ? example_arbor()
                                   : !poset_file.empty() ? read_poset_json(poset_file)
                                                         : staircase_corners(parse_shape(positional[0])).vertical();
  const Composition input(parse_int_list(positional.back()));
  if (input.size() != base.m())
    throw DomainError("composition has " + std::to_string(input.size()) + " entries, expected " +
                      std::to_string(base.m()));
  const BubbleSortResult r = bubble_sort_trace(base, input);
  std::vector<Composition> states{input};
  for (Transposition t : r.swaps) states.push_back(states.back().swapped(t.i, t.j));
  if (cfg.format == "json") {
    json swaps = json::array();
    for (Transposition t : r.swaps) swaps.push_back(json::array({t.i, t.j}));
    out << json{{"input", to_json(input)}, {"swaps", swaps}, {"output", to_json(r.output)}}.dump(2) << "\n";
    return 0;
  }
  out << "input  " << input.to_string() << "\n";
  for (std::size_t k = 0; k < r.swaps.size(); ++k)
    out << "swap " << r.swaps[k].to_string() << " " << states[k + 1].to_string() << "\n";
  out << "output " << r.output.to_string() << "\n";
  return 0;
}

int cmd_verify(std::ostream& out, const Config& cfg, const std::string& identity,
               const std::string& shape_text, const std::string& lambda_text) {
  require_format(cfg, {"text", "json"});
  const StaircaseShape shape = parse_shape(shape_text);
  std::vector<VerificationReport> reports;
  if (identity == "vdk") {
    if (!lambda_text.empty()) {
      reports.push_back(verify_vdk(shape, parse_partition(lambda_text)));
    } else {
      const std::size_t corners = staircase_corners(shape).size();
      for (int d = 1; d <= cfg.degree.value_or(5); ++d)
        for (const Partition& l : partitions_of(d, corners)) reports.push_back(verify_vdk(shape, l));
    }
  } else if (identity == "cauchy-bs" || identity == "cauchy-moebius") {
    if (!lambda_text.empty()) throw ParseError(identity + " takes no lambda");
    const int N = cfg.degree.value_or(default_degree(shape));
    reports.push_back(identity == "cauchy-bs" ? verify_cauchy_bs(shape, N) : verify_cauchy_moebius(shape, N));
  } else {
    throw ParseError("unknown identity '" + identity + "' (cauchy-bs, cauchy-moebius, vdk)");
  }

  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok &= r.passed();
    all.push_back(to_json(r));
  }
  if (cfg.format == "json") {
    out << all.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.summary() << "\n";
      for (const auto& n : r.notes) out << "  note: " << n << "\n";
    }
  }
  if (!cfg.out_dir.empty()) write_file(cfg, "verify-" + identity + "-" + shape.to_string() + ".json", all.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_sweep(std::ostream& out, const Config& cfg) {
  require_format(cfg, {"text", "json"});
  const SweepSummary s = conjecture_sweep(cfg.max_corners, cfg.max_weight, cfg.jobs);
  auto pick = [&](const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (std::size_t i : idx) a.push_back(to_json(s.instances[i]));
    return a;
  };
  std::int64_t lo = 0, hi = 0;
  std::size_t formula_checked = 0;
  for (const auto& in : s.instances) {
    lo = std::min(lo, in.mobius_min);
    hi = std::max(hi, in.mobius_max);
    formula_checked += in.mobius_formula_checked;
  }
  const json summary = {{"max_corners", s.max_corners},
                        {"max_weight", s.max_weight},
                        {"shapes", s.shapes},
                        {"instances", s.instances.size()},
                        {"mobius_range", json::array({lo, hi})},
                        {"mobius_violations", pick(s.mobius_violations)},
                        {"el_inconclusive", pick(s.el_inconclusive)},
                        {"mobius_formula_checked", formula_checked},
                        {"mobius_formula_failures", pick(s.formula_failures)},
                        {"order_agreement_failures", pick(s.agreement_failures)}};
  if (cfg.format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << "sweep max_corners=" << s.max_corners << " max_weight=" << s.max_weight << " shapes=" << s.shapes
        << " instances=" << s.instances.size() << "\n";
    out << "mobius range [" << lo << "," << hi << "], violations " << s.mobius_violations.size() << "\n";
    out << "EL certified " << s.instances.size() - s.el_inconclusive.size() << ", inconclusive "
        << s.el_inconclusive.size() << "\n";
    for (std::size_t i : s.el_inconclusive)
      out << "  inconclusive " << s.instances[i].shape << " " << s.instances[i].lambda << "\n";
    out << "mobius formula checked " << formula_checked << ", failures " << s.formula_failures.size() << "\n";
    out << "order agreement failures " << s.agreement_failures.size() << "\n";
    for (std::size_t i : s.mobius_violations)
      out << "CONJECTURE-VIOLATION " << s.instances[i].shape << " " << s.instances[i].lambda << " mobius ["
          << s.instances[i].mobius_min << "," << s.instances[i].mobius_max << "]\n";
  }
  if (!cfg.out_dir.empty()) {
    json full = summary;
    json every = json::array();
    for (const auto& in : s.instances) every.push_back(to_json(in));
    full["all"] = every;
    write_file(cfg, "sweep.json", full.dump(2) + "\n");
    if (s.conjecture_violated())
      write_file(cfg, "CONJECTURE-VIOLATION.json", pick(s.mobius_violations).dump(2) + "\n");
  }
  if (s.theorem_failed()) return 1;
  return s.conjecture_violated() ? 2 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bubble-sort on arborescent posets, DL-dense arrays and staircase Cauchy identities",
               "staircase"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_dir, "directory for report files");

  std::string shape_text, lambda_text, identity;
  bool orbit = false, example = false;
  std::string poset_file;
  std::vector<std::string> positional;

  auto* corners = app.add_subcommand("corners", "staircase corners and their order");
  corners->add_option("shape", shape_text, "column heights, e.g. 2,3,3,4")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the corner poset or of DL(lambda)");
  hasse->add_option("shape", shape_text)->required();
  hasse->add_option("lambda", lambda_text);
  hasse->add_flag("--orbit", orbit, "draw the whole orbit and mark the dominant weights");

  auto* dl = app.add_subcommand("dl", "DL-dense arrays with their poset properties");
  dl->add_option("shape", shape_text)->required();
  dl->add_option("lambda", lambda_text)->required();

  auto* bsort = app.add_subcommand("bsort", "bubble-sort trace");
  bsort->add_option("args", positional, "[SHAPE] COMPOSITION")->required();
  bsort->add_flag("--example-arbor", example, "use the nine-slot example poset");
  bsort->add_option("--poset", poset_file, "poset JSON file");

  auto* verify = app.add_subcommand("verify", "check cauchy-bs, cauchy-moebius or vdk");
  verify->add_option("identity", identity)->required();
  verify->add_option("shape", shape_text)->required();
  verify->add_option("lambda", lambda_text);
  verify->add_option("--degree", cfg.degree, "truncation degree")->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "Moebius and EL sweep over canonical shapes");
  sweep->add_option("--max-corners", cfg.max_corners)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--max-weight", cfg.max_weight)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores")->capture_default_str();

  for (auto* sub : {corners, hasse, dl, bsort, verify, sweep}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }

  try {
    if (*corners) return cmd_corners(out, cfg, shape_text);
    if (*hasse) return cmd_hasse(out, cfg, shape_text, lambda_text, orbit);
    if (*dl) return cmd_dl(out, cfg, shape_text, lambda_text);
    if (*bsort) return cmd_bsort(out, cfg, positional, example, poset_file);
    if (*verify) return cmd_verify(out, cfg, identity, shape_text, lambda_text);
    if (*sweep) return cmd_sweep(out, cfg);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace staircase::cli

#include "permstat/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "permstat/identities.hpp"
#include "permstat/pattern.hpp"
#include "permstat/serialize.hpp"
#include "permstat/shallow.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { plain, json, csv };

struct Options {
  Format format = Format::plain;

  std::string perm;
  std::string pattern;
  bool via_phi = false;
  bool list_occurrences = false;
  std::string method = "direct";

  std::string identity;
  std::string klass;
  std::string predicate = "shallow";
  std::string set_a;
  std::string set_b;
  int n = 7;
  unsigned threads = 0;
};

Pattern load_pattern(const std::string& expr) {
  const std::filesystem::path path(expr);
  if (path.extension() == ".json") {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open mesh pattern file '" + expr + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("mesh pattern file is not JSON: " + std::string(e.what()));
    }
    return mesh_from_json(j);
  }
  return parse_pattern(expr);
}

void emit(std::ostream& out, Format f, const ordered_json& j,
          const std::vector<std::string>& csv_columns) {
  switch (f) {
    case Format::json: out << j.dump(2) << '\n'; break;
    case Format::csv: {
      std::string header, row;
      for (const auto& c : csv_columns) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += c;
        if (!j.contains(c) || j[c].is_null()) continue;
        row += j[c].is_string() ? j[c].get<std::string>() : j[c].dump();
      }
      out << header << '\n' << row << '\n';
      break;
    }
    case Format::plain:
      for (const auto& [key, value] : j.items())
        out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      break;
  }
}

int cmd_stat(const Options& o, std::ostream& out) {
  const Permutation p = parse_permutation(o.perm);
  const CycleForm form = to_standard_cycles(p);
  ordered_json cycles = ordered_json::array();
  for (const auto& c : form.cycles()) cycles.push_back(c);
  ordered_json j{{"permutation", to_string(p)},
                 {"n", p.size()},
                 {"cycles", o.format == Format::json ? cycles : ordered_json(to_string(form))},
                 {"phi", to_string(fundamental_map(p))},
                 {"length", length(p)},
                 {"reflection_length", reflection_length(p)},
                 {"depth", depth(p)},
                 {"displacement", displacement(p)},
                 {"variance", variance(p)},
                 {"involution", is_involution(p)},
                 {"cycle", is_cycle(p)}};
  emit(out, o.format, j,
       {"permutation", "n", "phi", "length", "reflection_length", "depth", "displacement",
        "variance", "involution", "cycle"});
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Pattern pattern = load_pattern(o.pattern);
  const Permutation p = parse_permutation(o.perm);
  const Permutation host = o.via_phi ? fundamental_map(p) : p;
  ordered_json j{{"pattern", to_string(pattern)},
                 {"permutation", to_string(p)},
                 {"target", o.via_phi ? "fundamental" : "host"},
                 {"host", to_string(host)},
                 {"count", count(pattern, host)}};
  if (o.list_occurrences) j["occurrences"] = occurrences_to_json(occurrences(pattern, host));
  emit(out, o.format, j, {"pattern", "permutation", "target", "host", "count"});
  return kOk;
}

int cmd_shallow(const Options& o, std::ostream& out) {
  const Permutation p = parse_permutation(o.perm);
  ordered_json j{{"permutation", to_string(p)}};
  std::vector<std::string> columns{"permutation"};
  auto run_method = [&](const std::string& m) {
    bool verdict = false;
    if (m == "direct") verdict = is_shallow_direct(p);
    else if (m == "vincular") verdict = is_shallow_vincular(p);
    else if (m == "arrow") verdict = is_shallow_arrow(p);
    else if (m == "mesh") verdict = is_shallow_mesh(p);
    else throw std::invalid_argument("unknown method '" + m + "'");
    j[m] = verdict;
    columns.push_back(m);
    return verdict;
  };
  bool shallow = true;
  if (o.method == "all") {
    bool all_true = true, all_false = true;
    for (const char* m : {"direct", "vincular", "arrow", "mesh"}) {
      const bool v = run_method(m);
      all_true = all_true && v;
      all_false = all_false && !v;
    }
    j["agree"] = all_true || all_false;
    columns.push_back("agree");
    shallow = all_true;
  } else {
    shallow = run_method(o.method);
  }
  emit(out, o.format, j, columns);
  return shallow ? kOk : kMismatch;
}

const std::vector<std::string> kReportColumns{"identity", "n", "tested", "mismatches",
                                              "counterexample"};

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.identity == "list") {
    for (const auto& c : identity_catalog())
      out << c.name << '\t' << name(c.klass) << '\t' << c.description << '\n';
    return kOk;
  }
  std::vector<IdentityReport> reports;
  if (o.identity == "all") {
    for (const auto& c : identity_catalog()) reports.push_back(run_identity(c, o.n, o.threads));
  } else {
    reports.push_back(verify_identity(o.identity, o.n, o.threads));
  }
  bool clean = true;
  for (const auto& r : reports) clean = clean && r.mismatches == 0;

  if (o.format == Format::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : reports) doc.push_back(to_json(r));
    out << (reports.size() == 1 ? doc[0] : doc).dump(2) << '\n';
  } else if (o.format == Format::csv) {
    out << "identity,n,tested,mismatches,counterexample\n";
    for (const auto& r : reports)
      out << r.identity << ',' << r.n << ',' << r.tested << ',' << r.mismatches << ','
          << (r.counterexample ? '"' + to_string(*r.counterexample) + '"' : std::string()) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.identity << ": n<=" << r.n << " tested=" << r.tested
          << " mismatches=" << r.mismatches;
      if (r.counterexample) out << " counterexample=" << to_string(*r.counterexample);
      out << '\n';
    }
  }
  return clean ? kOk : kMismatch;
}

int cmd_census(const Options& o, std::ostream& out) {
  const PermClass klass = parse_perm_class(o.klass);
  const CensusPredicate pred = parse_census_predicate(o.predicate);
  std::vector<CensusRow> rows;
  for (int m = 1; m <= o.n; ++m) rows.push_back(census_row(klass, pred, m));
  bool clean = true;
  for (const auto& r : rows) clean = clean && r.match.value_or(true);

  if (o.format == Format::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) doc.push_back(to_json(r));
    out << doc.dump(2) << '\n';
  } else if (o.format == Format::csv) {
    out << kCensusCsvHeader << '\n';
    for (const auto& r : rows) out << to_csv(r) << '\n';
  } else {
    for (const auto& r : rows) {
      out << name(r.census.klass) << " n=" << r.census.n << ' ' << name(r.census.predicate)
          << " count=" << r.census.count;
      if (r.reference)
        out << ' ' << name(*r.sequence) << '=' << r.reference->str()
            << (*r.match ? " match" : " MISMATCH");
      out << '\n';
    }
  }
  return clean ? kOk : kMismatch;
}

int cmd_coincide(const Options& o, std::ostream& out) {
  const auto a = parse_pattern_set(o.set_a);
  const auto b = parse_pattern_set(o.set_b);
  const CoincidenceVerdict v = coincidence_check(a, b, o.n);
  emit(out, o.format, to_json(v), {"bound", "equal", "counterexample"});
  return v.equal ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation statistics as pattern functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* stat = app.add_subcommand("stat", "Statistics, fundamental image and cycle form");
  stat->add_option("perm", o.perm, "Permutation, e.g. 421365 or 4,2,1,3,6,5")->required();

  auto* cnt = app.add_subcommand("count", "Count occurrences of a pattern");
  cnt->add_option("pattern", o.pattern, "2-31, (1-23,1>4), or a mesh pattern .json file")
      ->required();
  cnt->add_option("perm", o.perm, "Host permutation")->required();
  cnt->add_flag("--via-phi", o.via_phi, "Count in the fundamental image");
  cnt->add_flag("--occurrences", o.list_occurrences, "Also list the occurrences");

  auto* sh = app.add_subcommand("shallow", "Shallowness verdicts");
  sh->add_option("perm", o.perm, "Permutation")->required();
  sh->add_option("--method", o.method, "direct|vincular|arrow|mesh|all")
      ->check(CLI::IsMember({"direct", "vincular", "arrow", "mesh", "all"}));

  auto* ver = app.add_subcommand("verify", "Exhaustive identity sweep");
  ver->add_option("identity", o.identity, "Identity name, 'all', or 'list'")->required();
  ver->add_option("--n", o.n, "Sweep every S_m with m <= n")->check(CLI::Range(1, 12));
  ver->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  auto* cen = app.add_subcommand("census", "Census rows against reference sequences");
  cen->add_option("class", o.klass, "all|involutions|cycles")->required();
  cen->add_option("--n", o.n, "Rows for 1..n")->check(CLI::Range(1, 12));
  cen->add_option("--predicate", o.predicate, "shallow|length=reflection_length|length=depth");

  auto* coin = app.add_subcommand("coincide", "Compare avoidance classes of two pattern sets");
  coin->add_option("setA", o.set_a, "e.g. {3-1-4-2,2-4-1-3}")->required();
  coin->add_option("setB", o.set_b, "e.g. {31-42,24-13}")->required();
  coin->add_option("--n", o.n, "Compare S_m for m <= n")->check(CLI::Range(1, 12));

  std::vector<std::string> argv_storage{"permstat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;

  try {
    if (*stat) return cmd_stat(o, out);
    if (*cnt) return cmd_count(o, out);
    if (*sh) return cmd_shallow(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*cen) return cmd_census(o, out);
    if (*coin) return cmd_coincide(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace permstat::cli

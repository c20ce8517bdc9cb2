// Command-line front end over the C interface.
//
//   chordal check-chordal fig1.txt --strategy greedy --emit-cert fig1.cert
//   chordal betti fig2d.txt --field 3 --engine taylor
//   chordal stability --fuzz --n 7 --d 3 --count 100 --seed 7
//
// Exit codes: 0 verdict computed, 1 usage or parse error, 2 invariant
// violation (a finding was emitted).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordal_c.h"

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct CliFailure {
  int exit_code;
};

struct ClutterDeleter {
  void operator()(chd_clutter* c) const { chd_clutter_free(c); }
};
struct BettiDeleter {
  void operator()(chd_betti* t) const { chd_betti_free(t); }
};
using ClutterPtr = std::unique_ptr<chd_clutter, ClutterDeleter>;
using BettiPtr = std::unique_ptr<chd_betti, BettiDeleter>;

/// Owns a string returned by the library.
class OwnedString {
 public:
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { chd_string_free(ptr_); }
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ == nullptr ? std::string() : std::string(ptr_); }

 private:
  char* ptr_ = nullptr;
};

void check(chd_status status, const std::string& context) {
  if (status == CHD_OK) return;
  std::cerr << "error: " << context << ": " << chd_last_error() << "\n";
  throw CliFailure{status == CHD_E_INTERNAL ? kExitViolation : kExitUsage};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw CliFailure{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw CliFailure{kExitUsage};
  }
  out << text;
}

/// A clutter file, a fixture reference "fixture:<name>", or a JSON build
/// script (top-level array).
ClutterPtr load_clutter(const std::string& source) {
  chd_clutter* raw = nullptr;
  constexpr std::string_view prefix = "fixture:";
  if (source.compare(0, prefix.size(), prefix) == 0) {
    check(chd_clutter_fixture(source.substr(prefix.size()).c_str(), &raw), source);
    return ClutterPtr(raw);
  }
  const std::string text = slurp(source);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    check(chd_clutter_from_script(text.c_str(), &raw), source);
  } else {
    check(chd_clutter_parse(text.c_str(), &raw), source);
  }
  return ClutterPtr(raw);
}

std::vector<int> parse_fields(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: bad field '" << item << "'\n";
      throw CliFailure{kExitUsage};
    }
  }
  return out;
}

const char* outcome_name(chd_outcome o) {
  switch (o) {
    case CHD_NO: return "no";
    case CHD_YES: return "yes";
    case CHD_UNKNOWN: return "unknown";
  }
  return "unknown";
}

struct Globals {
  std::uint64_t seed = 1;
  std::string fields = "2,3";
  double budget = 0;
  unsigned threads = 1;
};

int run_check_chordal(const std::string& file, const std::string& strategy, const std::string& emit,
                      const std::string& verify) {
  ClutterPtr c = load_clutter(file);
  if (!verify.empty()) {
    const std::string cert = slurp(verify);
    int valid = 0;
    std::size_t steps = 0;
    check(chd_verify_certificate(c.get(), cert.c_str(), &valid, &steps), "verify");
    std::cout << (valid != 0 ? "certificate: valid" : "certificate: invalid") << " (" << steps
              << " valid steps)\n";
    return kExitVerdict;
  }
  int chordal = 0;
  OwnedString cert;
  check(chd_check_chordal(c.get(), strategy == "greedy" ? CHD_GREEDY : CHD_BACKTRACKING, &chordal, cert.out()),
        "check-chordal");
  if (emit.empty()) {
    std::cout << cert.str();
  } else {
    write_text(emit, cert.str());
    std::cout << "# verdict: " << (chordal != 0 ? "chordal" : "not-chordal") << "\n";
  }
  return kExitVerdict;
}

int run_simplicial(const std::string& file, const std::string& e) {
  ClutterPtr c = load_clutter(file);
  if (e.empty()) {
    OwnedString report;
    check(chd_simplicial_report(c.get(), report.out()), "simplicial");
    std::cout << report.str();
    return kExitVerdict;
  }
  int simplicial = 0;
  int vacuous = 0;
  check(chd_is_simplicial(c.get(), e.c_str(), &simplicial, &vacuous), "simplicial");
  std::cout << e << "\t" << (simplicial != 0 ? "simplicial" : "not-simplicial") << (vacuous != 0 ? "\tvacuous" : "")
            << "\n";
  return kExitVerdict;
}

int run_variants(const std::string& file, const std::string& which, int l, int field, const Globals& g) {
  ClutterPtr c = load_clutter(file);
  chd_variant variant = CHD_VARIANT_W;
  if (which == "vtv") variant = CHD_VARIANT_VTV;
  if (which == "e") variant = CHD_VARIANT_E;
  if (which == "res-l") variant = CHD_VARIANT_RES_L;
  chd_outcome outcome = CHD_UNKNOWN;
  check(chd_check_variant(c.get(), variant, l, field, static_cast<std::uint64_t>(g.budget), &outcome), "variants");
  std::cout << which << "-chordal: " << outcome_name(outcome) << "\n";
  return kExitVerdict;
}

int run_betti(const std::string& file, int field, const std::string& engine, bool stats, const Globals& g) {
  ClutterPtr c = load_clutter(file);
  chd_betti* raw = nullptr;
  check(chd_betti_compute(c.get(), field, engine == "taylor" ? CHD_ENGINE_TAYLOR : CHD_ENGINE_HOCHSTER, g.threads,
                          &raw),
        "betti");
  BettiPtr t(raw);
  OwnedString tsv;
  check(chd_betti_tsv(t.get(), tsv.out()), "betti");
  std::cout << tsv.str();
  if (stats) {
    int reg = 0;
    int index = 0;
    int pd = 0;
    int linear = 0;
    check(chd_betti_stats(t.get(), &reg, &index, &pd, &linear), "betti");
    std::cout << "# reg=" << reg << " index=" << (index < 0 ? std::string("inf") : std::to_string(index))
              << " projdim=" << pd << " linear=" << (linear != 0 ? "yes" : "no") << "\n";
  }
  return kExitVerdict;
}

int run_linquot(const std::string& file, double budget) {
  ClutterPtr c = load_clutter(file);
  chd_outcome outcome = CHD_UNKNOWN;
  OwnedString order;
  check(chd_linear_quotients(c.get(), budget, &outcome, order.out()), "linquot");
  std::cout << "linear-quotients: " << outcome_name(outcome) << "\n" << order.str();
  return kExitVerdict;
}

struct StabilityArgs {
  std::string file;
  std::string e;
  std::string a = "all";
  bool diagnostic = false;
  bool fuzz = false;
  int n = 7;
  int d = 3;
  std::size_t count = 100;
  std::string out;
};

int run_stability(const StabilityArgs& s, const Globals& g) {
  const std::vector<int> fields = parse_fields(g.fields);
  OwnedString json;
  bool violated = false;
  if (s.fuzz) {
    std::size_t violations = 0;
    check(chd_stability_fuzz(s.n, s.d, s.count, g.seed, fields.data(), fields.size(), g.threads, &violations,
                             json.out()),
          "stability");
    violated = violations != 0;
  } else {
    if (s.file.empty() || s.e.empty()) {
      std::cerr << "error: stability needs a file and --e (or --fuzz)\n";
      return kExitUsage;
    }
    ClutterPtr c = load_clutter(s.file);
    int holds = 0;
    check(chd_stability(c.get(), s.e.c_str(), s.a.c_str(), fields.data(), fields.size(), s.diagnostic ? 1 : 0,
                        g.threads, &holds, json.out()),
          "stability");
    violated = holds == 0;
  }
  if (s.out.empty()) {
    std::cout << json.str() << "\n";
  } else {
    write_text(s.out, json.str() + "\n");
  }
  if (violated) {
    std::cerr << "finding: stability violated\n";
    return kExitViolation;
  }
  return kExitVerdict;
}

int run_atlas(int n, int d, bool iso, const std::string& findings, const Globals& g) {
  std::size_t violations = 0;
  OwnedString json;
  check(chd_atlas(n, d, static_cast<std::uint64_t>(g.budget), g.seed, g.threads, iso ? 1 : 0, &violations,
                  json.out()),
        "atlas");
  std::cout << json.str() << "\n";
  if (violations != 0) {
    if (!findings.empty()) write_text(findings, json.str() + "\n");
    std::cerr << "finding: " << violations << " containment violations\n";
    return kExitViolation;
  }
  return kExitVerdict;
}

int run_fixtures(const std::string& name, bool as_json) {
  if (name.empty()) {
    OwnedString names;
    check(chd_fixture_names(names.out()), "fixtures");
    std::cout << names.str();
    return kExitVerdict;
  }
  chd_clutter* raw = nullptr;
  check(chd_clutter_fixture(name.c_str(), &raw), "fixtures");
  ClutterPtr c(raw);
  OwnedString text;
  check(chd_clutter_serialize(c.get(), as_json ? 1 : 0, text.out()), "fixtures");
  std::cout << text.str();
  if (as_json) std::cout << "\n";
  return kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordal d-uniform clutters: recognition, Betti tables, stability checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(chd_version()));

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--fields", g.fields, "Comma separated characteristics (0 = rationals)")->capture_default_str();
  app.add_option("--budget", g.budget, "Search budget (seconds, states or samples, per subcommand)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  std::string file;
  int field = 2;
  int l = 2;

  auto* cc = app.add_subcommand("check-chordal", "Decide chordality and print a certificate");
  std::string strategy = "backtracking";
  std::string emit;
  std::string verify;
  cc->add_option("file", file, "Clutter file or fixture:<name>")->required();
  cc->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "backtracking"}))->capture_default_str();
  cc->add_option("--emit-cert", emit, "Write the certificate to this path");
  cc->add_option("--verify", verify, "Verify a certificate file instead of searching");

  auto* simp = app.add_subcommand("simplicial", "Classify submaximal circuits");
  std::string e;
  simp->add_option("file", file)->required();
  simp->add_option("--e", e, "A single (d-1)-set, e.g. \"2 3\"");

  auto* var = app.add_subcommand("variants", "W-, VTV-, E- or resolution-l-chordality");
  std::string which;
  var->add_option("file", file, "Clutter file, fixture:<name> or JSON build script")->required();
  var->add_option("--check", which)->required()->check(CLI::IsMember({"w", "vtv", "e", "res-l"}));
  var->add_option("--l", l)->capture_default_str();
  var->add_option("--field", field)->capture_default_str();

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of the complement's circuit ideal");
  std::string engine = "hochster";
  bool stats = false;
  betti->add_option("file", file)->required();
  betti->add_option("--field", field)->capture_default_str();
  betti->add_option("--engine", engine)->check(CLI::IsMember({"hochster", "taylor"}))->capture_default_str();
  betti->add_flag("--stats", stats, "Append regularity, index and projdim");

  auto* lq = app.add_subcommand("linquot", "Search for a linear quotients order");
  lq->add_option("file", file)->required();

  auto* st = app.add_subcommand("stability", "Compare Betti tables before and after deleting circuits");
  StabilityArgs sa;
  st->add_option("file", sa.file);
  st->add_option("--e", sa.e, "Simplicial (d-1)-set, e.g. \"1 2\"");
  st->add_option("--A", sa.a, "\"all\" or comma separated circuits, e.g. \"1 2 5,1 2 6\"")->capture_default_str();
  st->add_flag("--diagnostic", sa.diagnostic, "Skip the simpliciality precondition");
  st->add_flag("--fuzz", sa.fuzz, "Run a seeded random corpus");
  st->add_option("--n", sa.n, "Largest vertex count for --fuzz")->capture_default_str();
  st->add_option("--d", sa.d, "Uniformity for --fuzz")->capture_default_str();
  st->add_option("--count", sa.count, "Instances for --fuzz")->capture_default_str();
  st->add_option("--out", sa.out, "Write the JSON report here");

  auto* at = app.add_subcommand("atlas", "Classify small clutters and check class containments");
  int an = 4;
  int ad = 3;
  bool iso = false;
  std::string findings;
  at->add_option("--n", an)->capture_default_str();
  at->add_option("--d", ad)->capture_default_str();
  at->add_flag("--iso", iso, "Keep one clutter per isomorphism class");
  at->add_option("--findings", findings, "Write violating records here");

  auto* fx = app.add_subcommand("fixtures", "List or print the built-in fixtures");
  std::string name;
  bool as_json = false;
  fx->add_option("name", name);
  fx->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitVerdict : kExitUsage;
  }

  try {
    if (*cc) return run_check_chordal(file, strategy, emit, verify);
    if (*simp) return run_simplicial(file, e);
    if (*var) return run_variants(file, which, l, field, g);
    if (*betti) return run_betti(file, field, engine, stats, g);
    if (*lq) return run_linquot(file, g.budget > 0 ? g.budget : 60.0);
    if (*st) return run_stability(sa, g);
    if (*at) return run_atlas(an, ad, iso, findings, g);
    if (*fx) return run_fixtures(name, as_json);
  } catch (const CliFailure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}

// Acceptance checks. Prints one line per criterion:
//
//   criterion 4: PASS (100 instances, 0 violations, 41.2 s)
//
// Exit status is 0 when every selected criterion passes. Unknown outcomes of
// the extended dunce-hat search are advisory and do not change the status.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/atlas.hpp"
#include "chordal/betti.hpp"
#include "chordal/chordal_variants.hpp"
#include "chordal/fixtures.hpp"
#include "chordal/linear_quotients.hpp"
#include "chordal/nice.hpp"
#include "chordal/simplicial_elim.hpp"
#include "chordal/stability.hpp"
#include "../ideal_gen.hpp"
#include "../oracles.hpp"
#include "../script_gen.hpp"

using namespace chordal;
using nlohmann::json;

namespace {

enum class Verdict { kPass, kFail, kUnknown };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(s < 1 ? 3 : 1);
  out << std::fixed << s << " s";
  return out.str();
}

Outcome pass_if(bool ok, const std::string& detail) { return {ok ? Verdict::kPass : Verdict::kFail, detail}; }

std::vector<FieldSpec> fields_of(const json& j) {
  std::vector<FieldSpec> out;
  for (int p : j) out.emplace_back(p);
  return out;
}

VertexSet vs(std::initializer_list<int> m) { return VertexSet::of(m); }

Outcome figure1(const json&) {
  const Stopwatch clock;
  const Clutter c = figure1_clutter();
  std::vector<VertexSet> bad;
  for (VertexSet e : submaximal_circuits(c)) {
    if (!is_simplicial(c, e)) bad.push_back(e);
  }
  const double t = clock.seconds();
  const bool ok = bad == std::vector<VertexSet>{vs({2, 3}), vs({2, 6})} && t < 0.1;
  std::string names;
  for (VertexSet e : bad) names += (names.empty() ? "" : " ") + to_compact(e);
  return pass_if(ok, "non-simplicial: " + names + ", " + fmt_seconds(t));
}

Outcome figure2(const json&) {
  const Stopwatch clock;
  const ChordalityVerdict c = chordality_check(figure2_c());
  const ChordalityVerdict d = chordality_check(figure2_d());
  const bool cert = c.chordal && verify_certificate(figure2_c(), c.certificate.order);
  const double t = clock.seconds();
  return pass_if(cert && !d.chordal && t < 1.0,
                 std::string("C ") + (cert ? "chordal with valid certificate" : "not verified") + ", D " +
                     (d.chordal ? "chordal" : "not chordal") + ", " + fmt_seconds(t));
}

Outcome complete_clutters(const json&) {
  const Stopwatch clock;
  int checked = 0;
  std::string failures;
  for (int n = 2; n <= 7; ++n) {
    for (int d = 2; d <= n; ++d) {
      const Clutter c = complete_clutter(n, d);
      const ChordalityVerdict v = chordality_check(c);
      const std::vector<VertexSet> order = complete_clutter_order(n, d, 1);
      const bool ok = v.chordal && verify_certificate(c, v.certificate.order) &&
                      replay_certificate(c, order).valid_steps == order.size();
      if (!ok) failures += " (" + std::to_string(n) + "," + std::to_string(d) + ")";
      ++checked;
    }
  }
  const double t = clock.seconds();
  return pass_if(failures.empty() && t < 30.0,
                 std::to_string(checked) + " complete clutters" + (failures.empty() ? "" : ", failed:" + failures) +
                     ", " + fmt_seconds(t));
}

Outcome stability(const json& m) {
  const json& s = m.at("stability");
  const Stopwatch clock;
  const std::vector<FieldSpec> fields = fields_of(s.at("fields"));
  const std::vector<StabilityInstance> corpus =
      stability_corpus(s.at("n_max"), s.at("d"), s.at("count"), s.at("seed").get<std::uint64_t>());
  std::size_t violations = 0;
  std::size_t full = 0;
  for (const StabilityInstance& inst : corpus) {
    if (!is_simplicial(inst.c, inst.e) || simpliciality(inst.c, inst.e).vacuous) {
      ++violations;
      continue;
    }
    const StabilityReport r = check_stability(inst.c, inst.e, inst.a, fields);
    if (r.full_star) ++full;
    if (!r.holds()) ++violations;
  }
  const double t = clock.seconds();
  return pass_if(violations == 0 && corpus.size() == s.at("count").get<std::size_t>() && t < 600,
                 std::to_string(corpus.size()) + " instances (" + std::to_string(full) + " full stars), " +
                     std::to_string(violations) + " violations, " + fmt_seconds(t));
}

Outcome froberg(const json& m) {
  const json& s = m.at("froberg");
  const int n = s.at("n");
  const std::vector<FieldSpec> fields = fields_of(s.at("fields"));
  const Stopwatch clock;
  std::vector<VertexSet> edges;
  for_each_k_subset(VertexSet::first(n), 2, [&](VertexSet e) { edges.push_back(e); });
  std::size_t violations = 0;
  std::size_t chordal_count = 0;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexSet> fam;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if ((mask >> k) & 1u) {
        fam.push_back(edges[k]);
        pairs.emplace_back(edges[k].min(), edges[k].max());
      }
    }
    const Clutter g(n, fam, 2);
    const bool chordal = chordality_check(g).chordal;
    chordal_count += chordal ? 1 : 0;
    if (chordal != oracle::is_chordal_graph(n, pairs)) ++violations;
    const MonomialIdeal ideal = circuit_ideal(g);
    for (FieldSpec f : fields) {
      // The zero ideal (complete graph) counts as linear.
      const bool linear = ideal.is_zero() || has_linear_resolution(betti_table_hochster(ideal, f), 2);
      if (linear != chordal) ++violations;
    }
  }
  return pass_if(violations == 0, std::to_string(total) + " graphs (" + std::to_string(chordal_count) + " chordal), " +
                                      std::to_string(violations) + " violations, " + fmt_seconds(clock.seconds()));
}

struct DunceClauses {
  bool circuits = false;
  bool printed_order = false;
  std::size_t printed_valid_steps = 0;
  bool tables = false;
};

DunceClauses dunce_clauses() {
  DunceClauses r;
  const Clutter c = dunce_hat_clutter();
  r.circuits = c.size() == 39;
  const std::vector<VertexSet> order = dunce_hat_printed_order();
  r.printed_order = order.size() == 33 && verify_certificate(c, order);
  r.printed_valid_steps = replay_certificate(c, order).valid_steps;
  r.tables = true;
  for (FieldSpec f : {FieldSpec(2), FieldSpec(3)}) {
    const BettiTable t = betti_table_hochster(c, f);
    r.tables = r.tables && regularity(t) == 5 && !index_of(t).has_value();
  }
  return r;
}

Outcome dunce_hat(const json&) {
  const Stopwatch clock;
  const DunceClauses r = dunce_clauses();
  const double t = clock.seconds();
  return pass_if(r.circuits && r.printed_order && r.tables && t < 300,
                 std::string("39 circuits: ") + (r.circuits ? "yes" : "no") + ", printed 33-step order: " +
                     (r.printed_order ? "valid" : "invalid after " + std::to_string(r.printed_valid_steps) + " steps") +
                     ", reg 5 and index inf over GF(2), GF(3): " + (r.tables ? "yes" : "no") + ", " + fmt_seconds(t));
}

Outcome separations(const json& m) {
  const json& s = m.at("separations");
  const Stopwatch clock;
  const Clutter w = w_separation_example();
  const Clutter e = e_separation_example();
  const bool w_ok = chordality_check(w).chordal && !is_w_chordal(w);
  const bool e_ok = chordality_check(e).chordal && is_e_chordal(e).outcome == Tristate::kNo;

  AtlasOptions opts;
  const AtlasResult a = atlas(s.at("atlas_n"), s.at("atlas_d"), opts);
  std::size_t broken = a.exhaustive ? a.violation_count() : a.records.size() + 1;

  std::mt19937_64 gen(s.at("script_seed").get<std::uint64_t>());
  const int count = s.at("script_count");
  int scripts_ok = 0;
  for (int k = 0; k < count; ++k) {
    const Clutter c = generate_e_chordal(testgen::random_script(gen, 2 + k % 3));
    const bool e_yes = is_e_chordal(c).outcome == Tristate::kYes;
    const bool chordal = chordality_check(c).chordal;
    const bool w_impl = !is_w_chordal(c) || chordal;
    if (e_yes && chordal && w_impl) ++scripts_ok;
  }
  return pass_if(w_ok && e_ok && broken == 0 && scripts_ok == count,
                 std::string("W example: ") + (w_ok ? "ok" : "wrong") + ", E example: " + (e_ok ? "ok" : "wrong") +
                     ", atlas(4,3) " + std::to_string(a.records.size()) + " records with " + std::to_string(broken) +
                     " violations, " + std::to_string(scripts_ok) + "/" + std::to_string(count) + " scripts, " +
                     fmt_seconds(clock.seconds()));
}

Outcome oracle_equivalence(const json& m) {
  const json& s = m.at("oracle");
  const Stopwatch clock;
  std::mt19937_64 gen(s.at("seed").get<std::uint64_t>());
  const std::vector<FieldSpec> fields = fields_of(s.at("fields"));
  const int count = s.at("count");
  int discrepancies = 0;
  for (int k = 0; k < count; ++k) {
    const MonomialIdeal ideal = testgen::random_square_free_ideal(gen, s.at("n"), s.at("max_generators"));
    for (FieldSpec f : fields) {
      if (!(betti_table_hochster(ideal, f) == betti_table_taylor(ideal, f))) ++discrepancies;
    }
  }
  return pass_if(discrepancies == 0, std::to_string(count) + " ideals x " + std::to_string(fields.size()) +
                                         " fields, " + std::to_string(discrepancies) + " discrepancies, " +
                                         fmt_seconds(clock.seconds()));
}

Outcome nice(const json& m) {
  const json& s = m.at("nice");
  const Stopwatch clock;
  std::mt19937_64 gen(s.at("seed").get<std::uint64_t>());
  const int count = s.at("count");
  int discrepancies = 0;
  int inside = 0;
  int violating = 0;
  for (int k = 0; k < count; ++k) {
    const testgen::NiceInstance inst = testgen::random_nice_instance(gen);
    const NiceReport r = check_nice_conditions(inst.ideal, inst.u, inst.l_vars);
    if (!r.agree()) ++discrepancies;
    inside += r.l_in_i ? 1 : 0;
    violating += r.c ? 0 : 1;
  }
  return pass_if(discrepancies == 0 && inside > 0 && violating > 0,
                 std::to_string(count) + " instances (" + std::to_string(inside) + " with L in I, " +
                     std::to_string(violating) + " violating (c)), " + std::to_string(discrepancies) +
                     " discrepancies, " + fmt_seconds(clock.seconds()));
}

bool colon_ideal_is_linear(const std::vector<Monomial>& prefix, const Monomial& m) {
  if (prefix.empty()) return true;
  const MonomialIdeal q = colon_ideal(MonomialIdeal(m.nvars(), prefix), m);
  for (const Monomial& g : q.generators()) {
    if (g.degree() != 1) return false;
  }
  return true;
}

Outcome linear_quotients(const json& m, bool extended) {
  const json& s = m.at("linear_quotients");
  const Stopwatch clock;
  std::mt19937_64 gen(s.at("seed").get<std::uint64_t>());
  const int want = s.at("count");
  LinearQuotientsOptions opts;
  opts.budget_seconds = s.at("budget_seconds");
  int found = 0;
  int validated = 0;
  while (found < want) {
    const Clutter g = random_clutter(s.at("n"), 2, s.at("density"), gen());
    const MonomialIdeal ideal = circuit_ideal(g);
    if (ideal.is_zero() || !chordality_check(g).chordal) continue;
    ++found;
    const LinearQuotientsResult r = has_linear_quotients(ideal, opts);
    if (r.outcome != Tristate::kYes || r.order.size() != ideal.size()) continue;
    bool ok = true;
    std::vector<Monomial> prefix;
    for (const Monomial& mono : r.order) {
      ok = ok && colon_ideal_is_linear(prefix, mono) && oracle::colon_linear_by_membership(prefix, mono);
      prefix.push_back(mono);
    }
    validated += ok ? 1 : 0;
  }
  std::string detail = std::to_string(validated) + "/" + std::to_string(want) + " chordal graphs with validated orders";
  Verdict verdict = validated == want ? Verdict::kPass : Verdict::kFail;
  if (extended) {
    LinearQuotientsOptions long_run;
    long_run.budget_seconds = m.at("dunce_hat_linear_quotients").at("budget_seconds");
    const LinearQuotientsResult r = has_linear_quotients(circuit_ideal(dunce_hat_clutter()), long_run);
    detail += std::string(", dunce hat: ") + to_string(r.outcome) + " after " + std::to_string(r.states_explored) +
              " states";
    if (r.outcome == Tristate::kYes) verdict = Verdict::kFail;
    if (r.outcome == Tristate::kUnknown) detail += " (advisory)";
  } else {
    detail += ", dunce hat: not run (use --extended)";
  }
  return {verdict, detail + ", " + fmt_seconds(clock.seconds())};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "FAIL";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string manifest_path = CHORDAL_MANIFEST;
  bool extended = false;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 10));
  app.add_option("--manifest", manifest_path, "Pinned seeds and counts")->capture_default_str();
  app.add_flag("--extended", extended, "Also run the long dunce-hat linear quotients search");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "cannot open manifest " << manifest_path << "\n";
    return 1;
  }
  const json manifest = json::parse(in);

  const std::vector<std::function<Outcome(const json&)>> criteria{
      [](const json& m) { return figure1(m); },
      [](const json& m) { return figure2(m); },
      [](const json& m) { return complete_clutters(m); },
      [](const json& m) { return stability(m); },
      [](const json& m) { return froberg(m); },
      [](const json& m) { return dunce_hat(m); },
      [](const json& m) { return separations(m); },
      [](const json& m) { return oracle_equivalence(m); },
      [](const json& m) { return nice(m); },
      [extended](const json& m) { return linear_quotients(m, extended); },
  };
  if (selected.empty()) {
    for (int k = 1; k <= 10; ++k) selected.push_back(k);
  }
  bool all_pass = true;
  for (int k : selected) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)](manifest);
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << k << ": " << verdict_name(o.verdict) << " (" << o.detail << ")" << std::endl;
    all_pass = all_pass && o.verdict == Verdict::kPass;
  }
  return all_pass ? 0 : 1;
}

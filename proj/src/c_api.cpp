#include "chordal_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "chordal/atlas.hpp"
#include "chordal/betti.hpp"
#include "chordal/chordal_variants.hpp"
#include "chordal/complex.hpp"
#include "chordal/error.hpp"
#include "chordal/fixtures.hpp"
#include "chordal/io.hpp"
#include "chordal/linear_quotients.hpp"
#include "chordal/simplicial_elim.hpp"
#include "chordal/stability.hpp"

struct chd_clutter {
  chordal::Clutter value;
};

struct chd_betti {
  chordal::BettiTable value;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_parse_line = 0;
thread_local int g_parse_column = 0;

chd_status fail(chd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs body, translating exceptions into status codes.
template <class Body>
chd_status guarded(Body&& body) {
  g_last_error.clear();
  g_parse_line = 0;
  g_parse_column = 0;
  try {
    body();
    return CHD_OK;
  } catch (const chordal::ParseError& e) {
    g_parse_line = e.line();
    g_parse_column = e.column();
    return fail(CHD_E_PARSE, e.what());
  } catch (const chordal::Error& e) {
    return fail(static_cast<chd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CHD_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CHD_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out != nullptr) *out = dup_string(s);
}

chordal::VertexSet parse_set(std::string_view text) {
  const chordal::ParsedCertificate p = chordal::parse_certificate(std::string(text) + "\n");
  if (p.order.size() != 1) throw chordal::Error(chordal::ErrorCode::kInvalidArgument, "expected one vertex set");
  return p.order.front();
}

std::vector<chordal::FieldSpec> fields_of(const int* fields, std::size_t count) {
  std::vector<chordal::FieldSpec> out;
  for (std::size_t k = 0; k < count; ++k) out.emplace_back(fields[k]);
  if (out.empty()) out = {chordal::FieldSpec::gf(2), chordal::FieldSpec::gf(3)};
  return out;
}

chd_outcome outcome_of(chordal::Tristate t) {
  switch (t) {
    case chordal::Tristate::kNo: return CHD_NO;
    case chordal::Tristate::kYes: return CHD_YES;
    case chordal::Tristate::kUnknown: return CHD_UNKNOWN;
  }
  return CHD_UNKNOWN;
}

template <class Fn>
chd_status make_clutter(chd_clutter** out, Fn&& make) {
  if (out == nullptr) return fail(CHD_E_NULL, "null output handle");
  *out = nullptr;
  return guarded([&] { *out = new chd_clutter{make()}; });
}

}  // namespace

extern "C" {

const char* chd_version(void) { return "1.0.0"; }

const char* chd_status_name(chd_status status) {
  switch (status) {
    case CHD_OK: return "ok";
    case CHD_E_NULL: return "NullArgument";
    case CHD_E_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= CHD_E_ANTICHAIN && status <= CHD_E_INVALID_ARGUMENT) {
    return chordal::to_string(static_cast<chordal::ErrorCode>(status));
  }
  return "Unknown";
}

const char* chd_last_error(void) { return g_last_error.c_str(); }

void chd_last_parse_position(int* line, int* column) {
  if (line != nullptr) *line = g_parse_line;
  if (column != nullptr) *column = g_parse_column;
}

void chd_string_free(char* s) { std::free(s); }

chd_status chd_clutter_parse(const char* text, chd_clutter** out) {
  if (text == nullptr) return fail(CHD_E_NULL, "null text");
  return make_clutter(out, [&] { return chordal::parse_clutter(text); });
}

chd_status chd_clutter_read_file(const char* path, chd_clutter** out) {
  if (path == nullptr) return fail(CHD_E_NULL, "null path");
  return make_clutter(out, [&] { return chordal::parse_clutter(chordal::read_file(path)); });
}

chd_status chd_clutter_fixture(const char* name, chd_clutter** out) {
  if (name == nullptr) return fail(CHD_E_NULL, "null name");
  return make_clutter(out, [&] { return chordal::fixture(name); });
}

chd_status chd_clutter_complete(int n, int d, chd_clutter** out) {
  return make_clutter(out, [&] {
    if (n < 0 || d < 1) throw chordal::Error(chordal::ErrorCode::kInvalidArgument, "need n >= 0 and d >= 1");
    const chordal::Clutter c = chordal::complete_clutter(n, d);
    return chordal::Clutter(n, {c.circuits().begin(), c.circuits().end()}, d);
  });
}

chd_status chd_clutter_random(int n, int d, double density, uint64_t seed, chd_clutter** out) {
  return make_clutter(out, [&] { return chordal::random_clutter(n, d, density, seed); });
}

chd_status chd_clutter_from_script(const char* script_json, chd_clutter** out) {
  if (script_json == nullptr) return fail(CHD_E_NULL, "null script");
  return make_clutter(out, [&] { return chordal::generate_e_chordal(chordal::parse_build_script(script_json)); });
}

void chd_clutter_free(chd_clutter* c) { delete c; }

int chd_clutter_n(const chd_clutter* c) { return c == nullptr ? -1 : c->value.n(); }

int chd_clutter_d(const chd_clutter* c) { return c == nullptr || !c->value.d() ? -1 : *c->value.d(); }

size_t chd_clutter_size(const chd_clutter* c) { return c == nullptr ? 0 : c->value.size(); }

chd_status chd_clutter_serialize(const chd_clutter* c, int as_json, char** out) {
  if (c == nullptr || out == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    put_string(out, as_json != 0 ? chordal::serialize_clutter_json(c->value) : chordal::serialize_clutter(c->value));
  });
}

chd_status chd_fixture_names(char** out) {
  if (out == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    std::string s;
    for (const std::string& name : chordal::fixture_names()) s += name + "\n";
    put_string(out, s);
  });
}

chd_status chd_simplicial_report(const chd_clutter* c, char** out) {
  if (c == nullptr || out == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    std::string s;
    for (chordal::VertexSet e : chordal::submaximal_circuits(c->value)) {
      s += chordal::to_text(e) + (chordal::is_simplicial(c->value, e) ? "\tsimplicial\n" : "\tnot-simplicial\n");
    }
    put_string(out, s);
  });
}

chd_status chd_is_simplicial(const chd_clutter* c, const char* e, int* simplicial, int* vacuous) {
  if (c == nullptr || e == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    const chordal::Simpliciality s = chordal::simpliciality(c->value, parse_set(e));
    if (simplicial != nullptr) *simplicial = s.simplicial ? 1 : 0;
    if (vacuous != nullptr) *vacuous = s.vacuous ? 1 : 0;
  });
}

chd_status chd_check_chordal(const chd_clutter* c, chd_strategy strategy, int* chordal_out, char** certificate) {
  if (c == nullptr) return fail(CHD_E_NULL, "null clutter");
  return guarded([&] {
    const chordal::ChordalityVerdict v = chordal::chordality_check(
        c->value, strategy == CHD_GREEDY ? chordal::Strategy::kGreedy : chordal::Strategy::kBacktracking);
    if (chordal_out != nullptr) *chordal_out = v.chordal ? 1 : 0;
    put_string(certificate, chordal::render_certificate(v));
  });
}

chd_status chd_verify_certificate(const chd_clutter* c, const char* certificate, int* valid, size_t* valid_steps) {
  if (c == nullptr || certificate == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    const chordal::ParsedCertificate p = chordal::parse_certificate(certificate);
    const chordal::ReplayResult r = chordal::replay_certificate(c->value, p.order);
    if (valid != nullptr) *valid = (r.valid_steps == p.order.size() && r.remaining.empty()) ? 1 : 0;
    if (valid_steps != nullptr) *valid_steps = r.valid_steps;
  });
}

chd_status chd_check_variant(const chd_clutter* c, chd_variant variant, int l, int field, uint64_t budget,
                             chd_outcome* outcome) {
  if (c == nullptr || outcome == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    switch (variant) {
      case CHD_VARIANT_W: *outcome = chordal::is_w_chordal(c->value) ? CHD_YES : CHD_NO; break;
      case CHD_VARIANT_VTV: *outcome = chordal::is_vtv_chordal(c->value) ? CHD_YES : CHD_NO; break;
      case CHD_VARIANT_E: {
        chordal::EChordalOptions opts;
        if (budget != 0) opts.state_budget = budget;
        *outcome = outcome_of(chordal::is_e_chordal(c->value, opts).outcome);
        break;
      }
      case CHD_VARIANT_RES_L:
        *outcome = chordal::is_resolution_l_chordal(chordal::clique_complex(c->value), l, chordal::FieldSpec(field))
                       ? CHD_YES
                       : CHD_NO;
        break;
      default: throw chordal::Error(chordal::ErrorCode::kInvalidArgument, "unknown variant");
    }
  });
}

chd_status chd_betti_compute(const chd_clutter* c, int field, chd_engine engine, unsigned threads, chd_betti** out) {
  if (c == nullptr || out == nullptr) return fail(CHD_E_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    const chordal::FieldSpec f(field);
    if (engine == CHD_ENGINE_TAYLOR) {
      const chordal::MonomialIdeal ideal = chordal::circuit_ideal(c->value);
      if (ideal.is_zero()) throw chordal::Error(chordal::ErrorCode::kZeroIdeal, "the complement is empty");
      *out = new chd_betti{chordal::betti_table_taylor(ideal, f)};
    } else {
      chordal::BettiOptions opts;
      opts.threads = threads;
      *out = new chd_betti{chordal::betti_table_hochster(c->value, f, opts)};
    }
  });
}

void chd_betti_free(chd_betti* t) { delete t; }

chd_status chd_betti_tsv(const chd_betti* t, char** out) {
  if (t == nullptr || out == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] { put_string(out, chordal::render_betti_tsv(t->value)); });
}

chd_status chd_betti_stats(const chd_betti* t, int* regularity, int* index, int* projdim, int* linear) {
  if (t == nullptr) return fail(CHD_E_NULL, "null table");
  return guarded([&] {
    if (regularity != nullptr) *regularity = chordal::regularity(t->value);
    if (index != nullptr) *index = chordal::index_of(t->value).value_or(-1);
    if (projdim != nullptr) *projdim = chordal::projdim(t->value);
    if (linear != nullptr) *linear = chordal::has_linear_resolution(t->value) ? 1 : 0;
  });
}

chd_status chd_linear_quotients(const chd_clutter* c, double budget_seconds, chd_outcome* outcome, char** order) {
  if (c == nullptr || outcome == nullptr) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    chordal::LinearQuotientsOptions opts;
    opts.budget_seconds = budget_seconds;
    const chordal::LinearQuotientsResult r = chordal::has_linear_quotients(chordal::circuit_ideal(c->value), opts);
    *outcome = outcome_of(r.outcome);
    std::string s;
    for (const chordal::Monomial& m : r.order) s += chordal::to_string(m) + "\n";
    put_string(order, s);
  });
}

chd_status chd_stability(const chd_clutter* c, const char* e, const char* a, const int* fields, size_t field_count,
                         int diagnostic, unsigned threads, int* holds, char** report_json) {
  if (c == nullptr || e == nullptr || (field_count > 0 && fields == nullptr)) return fail(CHD_E_NULL, "null argument");
  return guarded([&] {
    const chordal::VertexSet es = parse_set(e);
    std::vector<chordal::VertexSet> as;
    const std::string a_text = a == nullptr ? "all" : a;
    if (a_text == "all") {
      for (chordal::VertexSet f : c->value.circuits()) {
        if (es.subset_of(f)) as.push_back(f);
      }
    } else {
      std::size_t start = 0;
      while (start < a_text.size()) {
        const std::size_t comma = a_text.find(',', start);
        const std::string part = a_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.find_first_not_of(" \t") != std::string::npos) as.push_back(parse_set(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    chordal::StabilityOptions opts;
    opts.require_simplicial = diagnostic == 0;
    opts.threads = threads;
    const std::vector<chordal::FieldSpec> fs = fields_of(fields, field_count);
    const chordal::StabilityReport r = chordal::check_stability(c->value, es, as, fs, opts);
    if (holds != nullptr) *holds = r.holds() ? 1 : 0;
    put_string(report_json, chordal::stability_report_json(r));
  });
}

chd_status chd_stability_fuzz(int n_max, int d, size_t count, uint64_t seed, const int* fields, size_t field_count,
                              unsigned threads, size_t* violations, char** report_json) {
  if (field_count > 0 && fields == nullptr) return fail(CHD_E_NULL, "null fields");
  return guarded([&] {
    using nlohmann::json;
    const std::vector<chordal::FieldSpec> fs = fields_of(fields, field_count);
    chordal::StabilityOptions opts;
    opts.threads = threads;
    std::size_t bad = 0;
    json failures = json::array();
    for (const chordal::StabilityInstance& inst : chordal::stability_corpus(n_max, d, count, seed)) {
      const chordal::StabilityReport r = chordal::check_stability(inst.c, inst.e, inst.a, fs, opts);
      if (!r.holds()) {
        ++bad;
        failures.push_back(json::parse(chordal::stability_report_json(r)));
      }
    }
    if (violations != nullptr) *violations = bad;
    json j;
    j["n_max"] = n_max;
    j["d"] = d;
    j["count"] = count;
    j["seed"] = seed;
    j["violations"] = bad;
    j["failures"] = failures;
    put_string(report_json, j.dump());
  });
}

chd_status chd_atlas(int n, int d, uint64_t budget, uint64_t seed, unsigned threads, int iso_reduce,
                     size_t* violations, char** report_json) {
  return guarded([&] {
    chordal::AtlasOptions opts;
    if (budget != 0) opts.budget = budget;
    opts.seed = seed;
    opts.threads = threads;
    opts.iso_reduce = iso_reduce != 0;
    const chordal::AtlasResult a = chordal::atlas(n, d, opts);
    if (violations != nullptr) *violations = a.violation_count();
    put_string(report_json, chordal::atlas_json(a));
  });
}

}  // extern "C"

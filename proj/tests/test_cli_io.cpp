#include <doctest.h>

#include <json.hpp>

#include "chordal/atlas.hpp"
#include "chordal/error.hpp"
#include "chordal/fixtures.hpp"
#include "chordal/io.hpp"
#include "chordal/simplicial_elim.hpp"
#include "chordal/stability.hpp"

using namespace chordal;

namespace {

VertexSet vs(std::initializer_list<int> m) { return VertexSet::of(m); }

std::string data_file(const std::string& name) { return read_file(std::string(CHORDAL_DATA_DIR) + "/" + name); }

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("text format") {
    const Clutter c = parse_clutter_text("# comment\nn=7 d=3\n1 2 3\n2 5 6\n");
    CHECK(c.n() == 7);
    CHECK(c.d() == 3);
    CHECK(c.size() == 2);
    CHECK(serialize_clutter(c) == "n=7 d=3\n1 2 3\n2 5 6\n");

    const Clutter unordered = parse_clutter_text("n=5 d=?\n3 4 5\n1 2 3\n");
    CHECK(unordered.d() == 3);
    CHECK(serialize_clutter(unordered) == "n=5 d=3\n1 2 3\n3 4 5\n");
    CHECK(serialize_clutter(parse_clutter_text(serialize_clutter(unordered))) == serialize_clutter(unordered));

    const Clutter empty = parse_clutter_text("n=4 d=3\n");
    CHECK(empty.empty());
    CHECK(parse_clutter_text("n=3 d=?\n-\n").size() == 1);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_clutter_text("n=x d=3\n1 2 3\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.code() == ErrorCode::kParseError);
    }
    try {
      parse_clutter_text("n=5 d=3\n1 2 3\n1 2 q\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_clutter_text("n=5 d=3\n1 2 3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_clutter_text("n=5 d=3\n3 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_clutter_json("{\"n\": 4}"), ParseError);
    CHECK_THROWS_AS(parse_clutter_json("{\"n\": 4, \"d\": 3, \"circuits\": [[1, 2, 9]]}"), Error);
  }

  TEST_CASE("JSON format") {
    const Clutter c = parse_clutter("{\"n\": 5, \"d\": null, \"circuits\": [[3, 4, 5], [1, 2, 3]]}");
    CHECK(c.d() == 3);
    CHECK(parse_clutter_json(serialize_clutter_json(c)) == c);
    const Clutter minor = vertex_deletion(figure1_clutter(), 4);
    CHECK(parse_clutter_json(serialize_clutter_json(minor)) == minor);
  }

  TEST_CASE("certificates") {
    const ChordalityVerdict v = chordality_check(figure2_c());
    const ParsedCertificate p = parse_certificate(render_certificate(v));
    CHECK(p.chordal == true);
    CHECK(p.order == v.certificate.order);
    const ParsedCertificate stuck = parse_certificate(render_certificate(chordality_check(figure2_d())));
    CHECK(stuck.chordal == false);
    CHECK(stuck.order.empty());
    CHECK_THROWS_AS(parse_certificate("1 2\n# verdict: maybe\n"), ParseError);
  }

  TEST_CASE("Betti TSV") {
    const BettiTable t = betti_table_hochster(figure2_d(), FieldSpec(3));
    const std::string tsv = render_betti_tsv(t);
    CHECK(tsv == "# field=3 indeg=3\n0\t3\t4\n1\t3\t3\n1\t4\t1\n2\t3\t1\n");
    CHECK(parse_betti_tsv(tsv) == t);
    CHECK(betti_rows_json(t) == "[[0,3,4],[1,3,3],[1,4,1],[2,3,1]]");
    CHECK_THROWS_AS(parse_betti_tsv("0\t3\t4\n"), ParseError);
  }

  TEST_CASE("build scripts") {
    const std::string text =
        R"([{"start": {"n": 4, "d": 3}}, {"glue": {"i": 2, "n": 4, "shared": [1, 2]}}, {"add": {"F": [3, 4, 7], "e": [4, 7]}}])";
    const std::vector<BuildStep> script = parse_build_script(text);
    REQUIRE(script.size() == 3);
    CHECK(parse_build_script(serialize_build_script(script)).size() == 3);
    const Clutter c = generate_e_chordal(script);
    CHECK(c.size() == 9);
    CHECK(c.contains(vs({3, 4, 7})));
    CHECK_THROWS_AS(parse_build_script(R"([{"jump": {}}])"), ParseError);
  }

  TEST_CASE("stability report JSON") {
    const Clutter c = figure1_clutter();
    const std::vector<VertexSet> a{vs({2, 5, 6})};
    const std::vector<FieldSpec> fields{FieldSpec(2)};
    const nlohmann::json j = nlohmann::json::parse(stability_report_json(check_stability(c, vs({5, 6}), a, fields)));
    CHECK(j["holds"] == true);
    CHECK(j["fields"].size() == 1);
    CHECK(j["D"]["circuits"].size() == 8);
  }

  TEST_CASE("fixtures") {
    CHECK(figure1_clutter().size() == 9);
    CHECK(figure2_c().size() == 8);
    CHECK(figure2_d().size() == 6);
    CHECK(dunce_hat_triangles().size() == 17);
    CHECK(dunce_hat_clutter().size() == 39);
    CHECK(dunce_hat_printed_order().size() == 33);
    for (const std::string& name : fixture_names()) CHECK_NOTHROW(fixture(name));
    CHECK_THROWS_AS(fixture("nope"), Error);
  }

  TEST_CASE("dunce hat triangulation is a contractible surface-like complex") {
    // Every edge lies in two triangles except 12, 13, 23 which lie in three;
    // V - E + F = 8 - 24 + 17 = 1.
    std::map<std::uint64_t, int> edge_count;
    for (VertexSet t : dunce_hat_triangles()) {
      for_each_k_subset(t, 2, [&](VertexSet e) { ++edge_count[e.bits()]; });
    }
    CHECK(edge_count.size() == 24);
    for (const auto& [bits, count] : edge_count) {
      const VertexSet e(bits);
      const bool special = e == vs({1, 2}) || e == vs({1, 3}) || e == vs({2, 3});
      CHECK(count == (special ? 3 : 2));
    }
  }

  TEST_CASE("data files match the embedded fixtures") {
    for (const std::string& name : fixture_names()) {
      CHECK(parse_clutter(data_file(name + ".txt")) == fixture(name));
      CHECK(data_file(name + ".txt") == serialize_clutter(fixture(name)));
    }
    CHECK(parse_clutter(data_file("dunce-hat.json")) == dunce_hat_clutter());
    const Clutter triangles = parse_clutter(data_file("dunce_hat_triangles.txt"));
    CHECK(std::vector<VertexSet>(triangles.circuits().begin(), triangles.circuits().end()) == dunce_hat_triangles());
    CHECK(parse_certificate(data_file("dunce_hat_printed_order.cert")).order == dunce_hat_printed_order());
  }

  TEST_CASE("atlas on four vertices") {
    const AtlasResult a = atlas(4, 3);
    CHECK(a.exhaustive);
    CHECK(a.records.size() == 16);
    CHECK(a.violation_count() == 0);
    CHECK(a.findings.empty());
    const nlohmann::json j = nlohmann::json::parse(atlas_json(a));
    CHECK(j["records"].size() == 16);

    AtlasOptions iso;
    iso.iso_reduce = true;
    CHECK(atlas(4, 3, iso).records.size() == 5);
  }

  TEST_CASE("atlas records of the separating examples") {
    const AtlasRecord w = classify(w_separation_example());
    CHECK(w.id == "123,134,235,345");
    CHECK(w.flags.chordal);
    CHECK_FALSE(w.flags.w_chordal);
    CHECK(w.violations.empty());
    const AtlasRecord e = classify(e_separation_example());
    CHECK(e.flags.chordal);
    CHECK(e.flags.e_chordal == Tristate::kNo);
    CHECK(e.flags.linres_gf2);
    CHECK(e.flags.linres_gf3);
  }

  TEST_CASE("canonical forms identify relabelings") {
    const Clutter a(5, {vs({1, 2, 3}), vs({1, 3, 4}), vs({2, 3, 5}), vs({3, 4, 5})});
    const Clutter b(5, {vs({5, 4, 3}), vs({5, 3, 2}), vs({4, 3, 1}), vs({3, 2, 1})});
    const Clutter other(5, {vs({1, 2, 3}), vs({1, 2, 4}), vs({1, 2, 5}), vs({3, 4, 5})});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(other));
  }
}

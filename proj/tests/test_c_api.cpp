#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "chordal_c.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  chd_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE("handles and accessors") {
    chd_clutter* c = nullptr;
    REQUIRE(chd_clutter_fixture("figure1", &c) == CHD_OK);
    CHECK(chd_clutter_n(c) == 7);
    CHECK(chd_clutter_d(c) == 3);
    CHECK(chd_clutter_size(c) == 9);
    char* text = nullptr;
    REQUIRE(chd_clutter_serialize(c, 0, &text) == CHD_OK);
    CHECK(take(text).rfind("n=7 d=3\n1 2 3\n", 0) == 0);
    chd_clutter_free(c);
    chd_clutter_free(nullptr);
    CHECK(std::strlen(chd_version()) > 0);
  }

  TEST_CASE("errors are reported by status") {
    chd_clutter* c = nullptr;
    CHECK(chd_clutter_parse("n=5 d=3\n1 2 3\n1 2 x\n", &c) == CHD_E_PARSE);
    CHECK(c == nullptr);
    int line = 0;
    int column = 0;
    chd_last_parse_position(&line, &column);
    CHECK(line == 3);
    CHECK(std::strlen(chd_last_error()) > 0);
    CHECK(std::string(chd_status_name(CHD_E_PARSE)) == "ParseError");

    CHECK(chd_clutter_parse("n=4 d=?\n1 2 3\n1 2\n", &c) == CHD_E_ANTICHAIN);
    CHECK(chd_clutter_fixture("missing", &c) == CHD_E_INVALID_ARGUMENT);
    CHECK(chd_clutter_parse(nullptr, &c) == CHD_E_NULL);
    CHECK(chd_clutter_complete(5, 3, nullptr) == CHD_E_NULL);

    REQUIRE(chd_clutter_fixture("figure1", &c) == CHD_OK);
    int holds = 0;
    CHECK(chd_stability(c, "2 3", "all", nullptr, 0, 0, 1, &holds, nullptr) == CHD_E_NOT_SIMPLICIAL);
    CHECK(chd_stability(c, "5 6", "1 2 3", nullptr, 0, 0, 1, &holds, nullptr) == CHD_E_CIRCUIT_NOT_THROUGH_E);
    chd_clutter_free(c);

    REQUIRE(chd_clutter_complete(5, 3, &c) == CHD_OK);
    chd_betti* t = nullptr;
    CHECK(chd_betti_compute(c, 2, CHD_ENGINE_HOCHSTER, 1, &t) == CHD_E_ZERO_IDEAL);
    chd_clutter_free(c);
  }

  TEST_CASE("chordality and certificates") {
    chd_clutter* c = nullptr;
    REQUIRE(chd_clutter_fixture("figure2-c", &c) == CHD_OK);
    int chordal = 0;
    char* cert = nullptr;
    REQUIRE(chd_check_chordal(c, CHD_BACKTRACKING, &chordal, &cert) == CHD_OK);
    CHECK(chordal == 1);
    const std::string text = take(cert);
    int valid = 0;
    size_t steps = 0;
    REQUIRE(chd_verify_certificate(c, text.c_str(), &valid, &steps) == CHD_OK);
    CHECK(valid == 1);
    int simplicial = 0;
    int vacuous = 0;
    REQUIRE(chd_is_simplicial(c, "3 6", &simplicial, &vacuous) == CHD_OK);
    CHECK(simplicial == 1);
    CHECK(vacuous == 1);
    chd_clutter_free(c);

    REQUIRE(chd_clutter_fixture("figure2-d", &c) == CHD_OK);
    REQUIRE(chd_check_chordal(c, CHD_GREEDY, &chordal, nullptr) == CHD_OK);
    CHECK(chordal == 0);
    chd_clutter_free(c);
  }

  TEST_CASE("variants") {
    chd_clutter* c = nullptr;
    REQUIRE(chd_clutter_fixture("w-separation", &c) == CHD_OK);
    chd_outcome o = CHD_UNKNOWN;
    REQUIRE(chd_check_variant(c, CHD_VARIANT_W, 0, 2, 0, &o) == CHD_OK);
    CHECK(o == CHD_NO);
    REQUIRE(chd_check_variant(c, CHD_VARIANT_RES_L, 2, 2, 0, &o) == CHD_OK);
    CHECK(o == CHD_YES);
    chd_clutter_free(c);
    REQUIRE(chd_clutter_fixture("e-separation", &c) == CHD_OK);
    REQUIRE(chd_check_variant(c, CHD_VARIANT_E, 0, 2, 0, &o) == CHD_OK);
    CHECK(o == CHD_NO);
    chd_clutter_free(c);
    REQUIRE(chd_clutter_from_script(R"([{"start": {"n": 5, "d": 3}}])", &c) == CHD_OK);
    CHECK(chd_clutter_size(c) == 10);
    REQUIRE(chd_check_variant(c, CHD_VARIANT_E, 0, 2, 0, &o) == CHD_OK);
    CHECK(o == CHD_YES);
    chd_clutter_free(c);
  }

  TEST_CASE("Betti tables") {
    chd_clutter* c = nullptr;
    REQUIRE(chd_clutter_fixture("figure2-d", &c) == CHD_OK);
    for (chd_engine engine : {CHD_ENGINE_HOCHSTER, CHD_ENGINE_TAYLOR}) {
      chd_betti* t = nullptr;
      REQUIRE(chd_betti_compute(c, 2, engine, 2, &t) == CHD_OK);
      char* tsv = nullptr;
      REQUIRE(chd_betti_tsv(t, &tsv) == CHD_OK);
      CHECK(take(tsv) == "# field=2 indeg=3\n0\t3\t4\n1\t3\t3\n1\t4\t1\n2\t3\t1\n");
      int reg = 0;
      int index = 0;
      int pd = 0;
      int linear = 0;
      REQUIRE(chd_betti_stats(t, &reg, &index, &pd, &linear) == CHD_OK);
      CHECK(reg == 4);
      CHECK(index == 1);
      CHECK(pd == 2);
      CHECK(linear == 0);
      chd_betti_free(t);
    }
    chd_clutter_free(c);
  }

  TEST_CASE("linear quotients, stability and atlas") {
    chd_clutter* c = nullptr;
    REQUIRE(chd_clutter_fixture("figure2-c", &c) == CHD_OK);
    chd_outcome o = CHD_UNKNOWN;
    char* order = nullptr;
    REQUIRE(chd_linear_quotients(c, 10.0, &o, &order) == CHD_OK);
    CHECK(o == CHD_YES);
    CHECK(!take(order).empty());
    chd_clutter_free(c);

    REQUIRE(chd_clutter_fixture("figure1", &c) == CHD_OK);
    const int fields[] = {2, 3};
    int holds = 0;
    char* json = nullptr;
    REQUIRE(chd_stability(c, "5 6", "all", fields, 2, 0, 2, &holds, &json) == CHD_OK);
    CHECK(holds == 1);
    CHECK(take(json).find("\"holds\":true") != std::string::npos);
    REQUIRE(chd_stability(c, "5 6", "2 5 6", fields, 2, 0, 1, &holds, nullptr) == CHD_OK);
    CHECK(holds == 1);
    chd_clutter_free(c);

    size_t violations = 1;
    REQUIRE(chd_stability_fuzz(6, 3, 5, 9, fields, 2, 1, &violations, nullptr) == CHD_OK);
    CHECK(violations == 0);
    REQUIRE(chd_atlas(4, 3, 0, 1, 1, 0, &violations, &json) == CHD_OK);
    CHECK(violations == 0);
    CHECK(take(json).find("\"records\"") != std::string::npos);
  }
}

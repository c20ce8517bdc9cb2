#include <doctest.h>

#include <random>

#include "chordal/chordal_variants.hpp"
#include "chordal/complex.hpp"
#include "chordal/error.hpp"
#include "chordal/fixtures.hpp"
#include "chordal/simplicial_elim.hpp"
#include "chordal/stability.hpp"
#include "script_gen.hpp"

using namespace chordal;

namespace {

VertexSet vs(std::initializer_list<int> m) { return VertexSet::of(m); }

}  // namespace

TEST_SUITE("chordal_variants") {
  TEST_CASE("W-simplicial vertices") {
    const Clutter c = w_separation_example();
    for (int v = 1; v <= 5; ++v) CHECK_FALSE(is_w_simplicial(c, v));
    const Clutter k = complete_clutter(5, 3);
    for (int v = 1; v <= 5; ++v) CHECK(is_w_simplicial(k, v));
    const Clutter single(4, {vs({1, 2, 3}), vs({2, 3, 4})});
    CHECK(is_w_simplicial(single, 1));
    CHECK_THROWS_AS(is_w_simplicial(single, 9), Error);
  }

  TEST_CASE("W-chordality") {
    CHECK_FALSE(is_w_chordal(w_separation_example()));
    CHECK(chordality_check(w_separation_example()).chordal);
    for (int n = 3; n <= 5; ++n) CHECK(is_w_chordal(complete_clutter(n, 3)));
    // A chordal graph: two triangles sharing an edge plus a pendant vertex.
    const Clutter g(5, {vs({1, 2}), vs({1, 3}), vs({2, 3}), vs({2, 4}), vs({3, 4}), vs({4, 5})}, 2);
    CHECK(is_w_chordal(g));
    // The 4-cycle is not chordal, hence not W-chordal.
    const Clutter cycle(4, {vs({1, 2}), vs({2, 3}), vs({3, 4}), vs({1, 4})}, 2);
    CHECK_FALSE(is_w_chordal(cycle));
    CHECK(is_w_chordal(Clutter(3, {}, 2)));
  }

  TEST_CASE("free vertices and VTV-chordality") {
    const Clutter c(4, {vs({1, 2, 3}), vs({1, 2, 4})});
    CHECK(is_free_vertex(c, 3));
    CHECK_FALSE(is_free_vertex(c, 1));
    CHECK_FALSE(is_vtv_chordal(w_separation_example()));
    CHECK(is_vtv_chordal(c));
    const Clutter path(4, {vs({1, 2}), vs({2, 3}), vs({3, 4})}, 2);
    CHECK(is_vtv_chordal(path));
  }

  TEST_CASE("simplicial iff every vertex is W-simplicial in the neighborhood") {
    // Exhaustive over subfamilies of C_{5,3}.
    const Clutter k = complete_clutter(5, 3);
    const std::vector<VertexSet> all(k.circuits().begin(), k.circuits().end());
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<VertexSet> fam;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1u) fam.push_back(all[i]);
      }
      const Clutter c(5, fam, 3);
      for (VertexSet e : submaximal_circuits(c)) {
        const Clutter local = induced(c, closed_neighborhood(c, e));
        bool every = true;
        e.for_each([&](int v) { every = every && is_w_simplicial(local, v); });
        CHECK(is_simplicial(c, e) == every);
      }
    }
  }

  TEST_CASE("build scripts") {
    const std::vector<BuildStep> start{StartStep{5, 3}};
    const Clutter k53 = complete_clutter(5, 3);
    CHECK(generate_e_chordal(start) == Clutter(5, {k53.circuits().begin(), k53.circuits().end()}, 3));

    const std::vector<BuildStep> add{StartStep{3, 3}, AddCircuitStep{vs({2, 3, 4}), vs({3, 4})}};
    const Clutter grown = generate_e_chordal(add);
    CHECK(grown.circuits().size() == 2);
    CHECK(grown.contains(vs({1, 2, 3})));
    CHECK(grown.contains(vs({2, 3, 4})));

    const std::vector<BuildStep> bad{StartStep{4, 3}, AddCircuitStep{vs({1, 2, 5}), vs({1, 2})}};
    try {
      generate_e_chordal(bad);
      FAIL("expected InvalidStep");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidStep);
    }
    const std::vector<BuildStep> no_start{GlueStep{1, 3, std::nullopt}};
    CHECK_THROWS_AS(generate_e_chordal(no_start), Error);

    const std::vector<BuildStep> glue{StartStep{4, 3}, GlueStep{2, 4, vs({1, 2})}};
    const Clutter glued = generate_e_chordal(glue);
    CHECK(glued.n() == 6);
    CHECK(glued.size() == 8);
    CHECK(glued.contains(vs({1, 5, 6})));
    const std::vector<BuildStep> not_clique{StartStep{3, 2}, AddCircuitStep{vs({3, 4}), vs({4})},
                                            GlueStep{3, 4, vs({1, 2, 4})}};
    CHECK_THROWS_AS(generate_e_chordal(not_clique), Error);
  }

  TEST_CASE("E-chordality") {
    CHECK(is_e_chordal(e_separation_example()).outcome == Tristate::kNo);
    CHECK(chordality_check(e_separation_example()).chordal);
    for (int n = 3; n <= 7; ++n) CHECK(is_e_chordal(complete_clutter(n, 3)).outcome == Tristate::kYes);
    CHECK(is_e_chordal(Clutter(4, {}, 3)).outcome == Tristate::kYes);
    CHECK(is_e_chordal(figure2_d()).outcome == Tristate::kNo);

    EChordalOptions tiny;
    tiny.state_budget = 1;
    const EChordalVerdict v = is_e_chordal(figure1_clutter(), tiny);
    CHECK(v.outcome == Tristate::kUnknown);
  }

  TEST_CASE("generated scripts round-trip and are chordal") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<BuildStep> script = testgen::random_script(gen, 2 + static_cast<int>(trial % 3));
      const Clutter c = generate_e_chordal(script);
      CHECK(is_e_chordal(c).outcome == Tristate::kYes);
      CHECK(chordality_check(c).chordal);
    }
  }

  TEST_CASE("containments on random clutters") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 80; ++trial) {
      const Clutter c = random_clutter(5 + static_cast<int>(trial % 2), 3, 0.5, gen());
      const bool chordal = chordality_check(c).chordal;
      const bool w = is_w_chordal(c);
      if (is_vtv_chordal(c)) CHECK(w);
      if (w) CHECK(chordal);
      if (is_e_chordal(c).outcome == Tristate::kYes) CHECK(chordal);
    }
  }

  TEST_CASE("resolution l-chordality") {
    const SimplicialComplex full = SimplicialComplex::simplex(4, VertexSet::first(4));
    for (int l = 0; l <= 3; ++l) CHECK(is_resolution_l_chordal(full, l, FieldSpec(2)));
    const SimplicialComplex triangle = SimplicialComplex::from_facets(3, {vs({1, 2}), vs({1, 3}), vs({2, 3})});
    CHECK_FALSE(is_resolution_l_chordal(triangle, 1, FieldSpec(2)));
    CHECK(is_resolution_l_chordal(triangle, 0, FieldSpec(2)));

    std::mt19937_64 gen(41);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 25; ++trial) {
      const Clutter c = random_clutter(6, 3, 0.6, gen());
      if (!chordality_check(c).chordal) continue;
      ++tested;
      const SimplicialComplex k = clique_complex(c);
      for (int l = 2; l <= 3; ++l) {
        for (int p : {2, 3, 0}) CHECK(is_resolution_l_chordal(k, l, FieldSpec(p)));
      }
    }
    CHECK(tested > 0);
  }
}

#include <catch2/catch.hpp>

#include "kleinian/repfind.hpp"

using namespace kleinian;

TEST_CASE("variety equations fixtures") {
  // one generator, no relators: just the determinant equation
  Presentation p1 = parse_presentation("gens: g\n");
  Ideal i1 = variety_equations(p1);
  CHECK(i1.nvars == 4);
  REQUIRE(i1.generators.size() == 1);
  auto names = variety_variable_names(1);
  CHECK(i1.generators[0] == parse_multipoly("z1_1*z4_1 - z2_1*z3_1 - 1", names));

  // relator g: determinant equation plus the entries of rho(g) - I
  Presentation p2 = parse_presentation("gens: g\nrel: g\n");
  Ideal i2 = variety_equations(p2);
  REQUIRE(i2.generators.size() == 5);
  CHECK(i2.generators[1] == parse_multipoly("z1_1 - 1", names));
  CHECK(i2.generators[2] == parse_multipoly("z2_1", names));
  CHECK(i2.generators[3] == parse_multipoly("z3_1", names));
  CHECK(i2.generators[4] == parse_multipoly("z4_1 - 1", names));
}

TEST_CASE("commutator expansion verified symbolically on one entry") {
  Presentation p = parse_presentation("gens: a b\nrel: a b A B\n");
  Ideal ideal = variety_equations(p);
  // 2 determinant equations + 4 commutator entries
  REQUIRE(ideal.generators.size() == 6);
  auto names = variety_variable_names(2);
  // hand-checked upper-left entry of (AB)(A^-1)(B^-1) - 1, with the adjugate
  // inverses: A^-1 = [[z4, -z2], [-z3, z1]]
  // AB = [[a1 b1 + a2 b3, a1 b2 + a2 b4], [a3 b1 + a4 b3, a3 b2 + a4 b4]]
  // first entry of AB*A^-1: (a1 b1 + a2 b3) a4 - (a1 b2 + a2 b4) a3
  // then times B^-1 column (b4, -b3):
  std::string a1 = "z1_1", a2 = "z2_1", a3 = "z3_1", a4 = "z4_1";
  std::string b1 = "z1_2", b2 = "z2_2", b3 = "z3_2", b4 = "z4_2";
  std::string p11 = "((" + a1 + "*" + b1 + " + " + a2 + "*" + b3 + ")*" + a4 + " - (" + a1 +
                    "*" + b2 + " + " + a2 + "*" + b4 + ")*" + a3 + ")";
  std::string p12 = "((" + a1 + "*" + b1 + " + " + a2 + "*" + b3 + ")*(0 - " + a2 + ") + (" +
                    a1 + "*" + b2 + " + " + a2 + "*" + b4 + ")*" + a1 + ")";
  std::string entry = p11 + "*" + b4 + " + " + p12 + "*(0 - " + b3 + ") - 1";
  MultiPoly expected = parse_multipoly(entry, names);
  bool found = false;
  for (const auto& g : ideal.generators)
    if (g == expected) found = true;
  CHECK(found);
}

TEST_CASE("constrain_pair fixtures") {
  Presentation p = parse_presentation("gens: g h\n");
  Ideal base = variety_equations(p);
  Ideal c = constrain_pair(base, 1, 2);
  CHECK(c.generators.size() == base.generators.size() + 3);
  CHECK_THROWS_AS(constrain_pair(base, 1, 1), DomainError);

  // the promised point satisfies all constraints: rho(g) upper triangular
  // with upper-right 1, rho(h) lower triangular
  auto names = variety_variable_names(2);
  std::vector<AlgNum> point;
  // g = [[1, 1], [0, 1]], h = [[1, 0], [5, 1]]
  for (Rat v : {Rat(1), Rat(1), Rat(0), Rat(1), Rat(1), Rat(0), Rat(5), Rat(1)})
    point.emplace_back(v);
  for (const auto& gen : c.generators) CHECK(gen.eval_alg(point).is_zero());

  // rho(g) = I contradicts the constraints: unit ideal
  Presentation ptolerate = parse_presentation("gens: g h\nrel: g\n");
  Ideal forced = constrain_pair(variety_equations(ptolerate), 1, 2);
  CHECK(dimension(forced) == -1);
}

TEST_CASE("candidate_reps fixtures") {
  // <g | g>: single generator, no valid pairs
  Presentation trivial_group = parse_presentation("gens: g\nrel: g\n");
  CandidateList c1 = candidate_reps(trivial_group);
  CHECK(c1.representations.empty());
  REQUIRE(c1.warnings.size() == 1);
  CHECK(c1.warnings[0] == CandidateWarning::no_generator_pairs);
  CHECK(c1.complete());

  // free group of rank 1
  Presentation z = parse_presentation("gens: g\n");
  CandidateList c2 = candidate_reps(z);
  CHECK(c2.representations.empty());
  REQUIRE(c2.warnings.size() == 1);
  CHECK(c2.warnings[0] == CandidateWarning::no_generator_pairs);

  // Klein four-ish: a^2, b^2, (ab)^2; in SL2 the squares force +-I, which
  // contradicts the normalization, so every slice is empty
  Presentation klein = parse_presentation("gens: a b\nrel: a a\nrel: b b\nrel: a b a b\n");
  CandidateList c3 = candidate_reps(klein);
  CHECK(c3.complete());
  for (const auto& rep : c3.representations) {
    CHECK(rep.satisfies_relators(klein));
    CHECK(equals(rep.evaluate({1, 1}), MatrixSL2::identity()));
  }
}

TEST_CASE("Z^2 presentation has only positive-dimensional slices") {
  Presentation z2 = parse_presentation("gens: a b\nrel: a b A B\n");
  CandidateList c = candidate_reps(z2);
  CHECK(c.representations.empty());
  REQUIRE(!c.warnings.empty());
  CHECK(!c.complete());
  bool has_positive = false;
  for (auto w : c.warnings)
    if (w == CandidateWarning::positive_dimensional_component) has_positive = true;
  CHECK(has_positive);
}

TEST_CASE("returned candidates satisfy the normalization and dedupe") {
  // a presentation with zero-dimensional slices: a^3 = 1 forces trace
  // conditions; use <a, b | a b> (b = a^-1): reps are determined by a alone
  // and the slice pins entries, making the solutions discrete
  Presentation p = parse_presentation("gens: a b\nrel: a b\n");
  CandidateList c = candidate_reps(p);
  for (const auto& rep : c.representations) {
    CHECK(rep.satisfies_relators(p));
    // Eq 2 for some ordered pair: find one that matches
    bool some_pair = false;
    for (int k = 1; k <= 2 && !some_pair; ++k)
      for (int l = 1; l <= 2; ++l) {
        if (k == l) continue;
        const MatrixSL2& gk = rep.image_of_generator(k);
        const MatrixSL2& gl = rep.image_of_generator(l);
        if (is_one(gk.b) && gk.c.is_zero() && gl.b.is_zero()) {
          some_pair = true;
          break;
        }
      }
    CHECK(some_pair);
  }
  for (std::size_t i = 0; i < c.representations.size(); ++i)
    for (std::size_t j = i + 1; j < c.representations.size(); ++j)
      CHECK(!equals(c.representations[i], c.representations[j]));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lle/graded.hpp"
#include "lle/operator_span.hpp"

using namespace lle;

namespace {
const GeneratorCatalog& catalog() {
  static GeneratorCatalog c{GammaRep::dirac()};
  return c;
}
const StructureConstants& super_table() {
  static StructureConstants t = bracket_table(super_spec(), catalog());
  return t;
}
}  // namespace

TEST_CASE("superalgebra anticommutator table") {
  const auto& t = super_table();
  auto expect_single = [&](const std::string& a, const std::string& b, const std::string& g,
                           const Scalar& coeff) {
    const BracketEntry& e = t.at(a, b);
    REQUIRE(e.closed);
    CHECK(e.kind == BracketKind::Anticommutator);
    REQUIRE(e.expansion.size() == 1);
    CHECK(e.expansion[0].first == g);
    CHECK(e.expansion[0].second == coeff);
  };
  expect_single("Q", "Q", "H", Scalar(2));
  expect_single("S", "S", "K", Scalar(2));
  expect_single("Q", "S", "D", Scalar(1));
  for (int j = 1; j <= 3; ++j) {
    expect_single("X" + std::to_string(j), "X" + std::to_string(j), "M", Scalar(1));
    expect_single("Q", "X" + std::to_string(j), "P" + std::to_string(j), Scalar(1));
    expect_single("S", "X" + std::to_string(j), "G" + std::to_string(j), Scalar(1));
  }
  CHECK(t.at("X1", "X2").expansion.empty());  // delta_jk
}

TEST_CASE("superalgebra closes and M is central") {
  const auto& t = super_table();
  CHECK(t.all_closed);
  CHECK(t.antisymmetry_violations == 0);
  for (const auto& g : super_spec().generators) {
    CHECK(t.at("M", g).expansion.empty());
    CHECK(t.at(g, "M").expansion.empty());
  }
}

TEST_CASE("schroedinger substructure") {
  const auto& cat = catalog();
  AlgebraSpec spec = super_spec();
  // sl(2): [D,H] = -2H, [D,K] = 2K, [H,K] = D
  CHECK(commutator(cat.at("D"), cat.at("H")) == Scalar(-2) * cat.at("H"));
  CHECK(commutator(cat.at("D"), cat.at("K")) == Scalar(2) * cat.at("K"));
  CHECK(commutator(cat.at("H"), cat.at("K")) == cat.at("D"));
  CHECK(subalgebra_check(spec, cat, {"H", "D", "K"}));
  CHECK(subalgebra_check(spec, cat, {"J12", "J13", "J23"}));
  CHECK(subalgebra_check(spec, cat, {"P1", "P2", "P3", "G1", "G2", "G3", "M"}));
  CHECK(subalgebra_check(spec, cat, {"H", "D"}));  // [D,H] is proportional to H
}

TEST_CASE("z2z2 grading assignment counts") {
  AlgebraSpec spec = z2z2_spec();
  CHECK(spec.generators.size() == 59);
  std::map<GradedDegree, int> count;
  for (const auto& g : spec.generators) count[spec.degree_of(g)] += 1;
  CHECK(count[GradedDegree{0, 0}] == 30);
  CHECK(count[GradedDegree{0, 1}] == 6);
  CHECK(count[GradedDegree{1, 0}] == 20);
  CHECK(count[GradedDegree{1, 1}] == 3);
  CHECK(spec.degree.count("M") == 0);
}

TEST_CASE("z2z2 spot checks") {
  const auto& cat = catalog();
  AlgebraSpec spec = z2z2_spec();
  // [X1, X2] = Xt3 exactly (commutator: degrees (1,1).(1,1) is even)
  CHECK(graded_kind(spec.degree_of("X1"), spec.degree_of("X2")) == BracketKind::Commutator);
  CHECK(commutator(cat.at("X1"), cat.at("X2")) == cat.at("Xt3"));
  // {P_j, G_k} = W_jk (anticommutator: (0,1).(0,1) is odd)
  CHECK(graded_kind(spec.degree_of("P1"), spec.degree_of("G2")) == BracketKind::Anticommutator);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      CHECK(anticommutator(cat.at("P" + std::to_string(j)), cat.at("G" + std::to_string(k))) ==
            cat.at("W" + std::to_string(j) + std::to_string(k)));
  // self-brackets of X vanish under the z2z2 rule
  CHECK(graded_bracket(cat.at("X1"), spec.degree_of("X1"), cat.at("X1"), spec.degree_of("X1"))
            .is_zero());
}

TEST_CASE("antisymmetry sweep has no violations") {
  CHECK(antisymmetry_check(super_spec(), catalog()).empty());
}

TEST_CASE("jacobi on sampled triples, rewrite agrees with direct") {
  const auto& cat = catalog();
  AlgebraSpec spec = z2z2_spec();
  CHECK(jacobi_residual_direct(spec, cat, "H", "H", "H").is_zero());
  CHECK(jacobi_residual_direct(spec, cat, "Q", "Q", "S").is_zero());
  CHECK(jacobi_residual_direct(spec, cat, "X1", "X2", "X3").is_zero());
  CHECK(jacobi_residual_direct(spec, cat, "P1", "G1", "X1").is_zero());
  CHECK(jacobi_residual_direct(spec, cat, "W11", "Y12", "Z13").is_zero());
  CHECK(jacobi_residual_direct(spec, cat, "K", "Pt12", "X2").is_zero());

  std::mt19937_64 rng(0x5eed06);
  std::uniform_int_distribution<std::size_t> pick(0, spec.generators.size() - 1);
  for (int iter = 0; iter < 60; ++iter) {
    const std::string& a = spec.generators[pick(rng)];
    const std::string& b = spec.generators[pick(rng)];
    const std::string& c = spec.generators[pick(rng)];
    CAPTURE(a); CAPTURE(b); CAPTURE(c);
    CHECK(jacobi_residual_direct(spec, cat, a, b, c).is_zero());
  }
}

TEST_CASE("super jacobi direct sweep for the odd sector") {
  const auto& cat = catalog();
  AlgebraSpec spec = super_spec();
  // {Q,Q} with S: [ {Q,Q}, S ] = 2 [H, S]
  DiffOperator lhs = commutator(anticommutator(cat.at("Q"), cat.at("Q")), cat.at("S"));
  CHECK(lhs == Scalar(2) * commutator(cat.at("H"), cat.at("S")));
  CHECK(jacobi_residual_direct(spec, cat, "Q", "Q", "S").is_zero());
}

TEST_CASE("including the Xt generators breaks superalgebra closure") {
  const auto& cat = catalog();
  // [Xt1, Q] is first order with bare gamma-derivative terms, outside the
  // span of the super Schroedinger generators; in the z2z2 algebra it is
  // exactly the antisymmetric combination Y32 - Y23.
  DiffOperator br = commutator(cat.at("Xt1"), cat.at("Q"));
  CHECK(br == cat.at("Y32") - cat.at("Y23"));
  AlgebraSpec spec = super_spec();
  OperatorSpan span;
  for (const auto& g : spec.generators) span.insert(cat.at(g));
  for (int j = 1; j <= 3; ++j) span.insert(cat.at("Xt" + std::to_string(j)));
  CHECK(!span.contains(br));
}

TEST_CASE("sub superalgebras of the z2z2 grading") {
  const auto& cat = catalog();
  AlgebraSpec spec = z2z2_spec();
  std::vector<std::string> g00_g01, g00_g10;
  for (const auto& g : spec.generators) {
    GradedDegree d = spec.degree_of(g);
    if (d == GradedDegree{0, 0}) {
      g00_g01.push_back(g);
      g00_g10.push_back(g);
    } else if (d == GradedDegree{0, 1}) {
      g00_g01.push_back(g);
    } else if (d == GradedDegree{1, 0}) {
      g00_g10.push_back(g);
    }
  }
  CHECK(subalgebra_check(spec, cat, g00_g01));
  CHECK(subalgebra_check(spec, cat, g00_g10));
}

TEST_CASE("divergences between the two algebras") {
  auto divergences = compare_algebras(catalog());
  CHECK(!divergences.empty());
  auto find = [&](const std::string& a, const std::string& b) -> const Divergence* {
    for (const auto& d : divergences)
      if (d.left == a && d.right == b) return &d;
    return nullptr;
  };
  const Divergence* pg = find("P1", "G1");
  REQUIRE(pg != nullptr);
  CHECK(pg->super_kind == BracketKind::Commutator);
  CHECK(pg->z2z2_kind == BracketKind::Anticommutator);
  REQUIRE(pg->super_expansion.size() == 1);
  CHECK(pg->super_expansion[0].first == "M");
  REQUIRE(pg->z2z2_expansion.size() == 1);
  CHECK(pg->z2z2_expansion[0].first == "W11");

  const Divergence* xx = find("X1", "X1");
  REQUIRE(xx != nullptr);
  CHECK(xx->super_expansion.size() == 1);   // {X1,X1} = M
  CHECK(xx->z2z2_expansion.empty());        // [X1,X1] = 0

  // (Q,S) is an anticommutator in both and therefore not a divergence
  CHECK(find("Q", "S") == nullptr);
}

TEST_CASE("rank report resolves the dependency question") {
  const auto& cat = catalog();
  // The only relations among the 59 generators are the antisymmetric parts
  // of W: W_jk - W_kj = -4im J_jk + eps_jkn Xt_n.
  const Scalar m4 = Scalar(-4) * Scalar::i() * Scalar::m();
  CHECK(cat.at("W12") - cat.at("W21") == m4 * cat.at("J12") + cat.at("Xt3"));
  CHECK(cat.at("W13") - cat.at("W31") == m4 * cat.at("J13") - cat.at("Xt2"));
  CHECK(cat.at("W23") - cat.at("W32") == m4 * cat.at("J23") + cat.at("Xt1"));

  RankReport r = rank_report(cat);
  CHECK(r.members.at("g00") == 30);
  CHECK(r.members.at("g01") == 6);
  CHECK(r.members.at("g10") == 20);
  CHECK(r.members.at("g11") == 3);
  CHECK(r.by_component.at("g00") == 27);
  CHECK(r.by_component.at("g01") == 6);
  CHECK(r.by_component.at("g10") == 20);
  CHECK(r.by_component.at("g11") == 3);
  CHECK(r.total_z2z2 == 56);
  // M is not in the span of the graded generators: it really dropped out
  CHECK(r.total_with_m == 57);
}

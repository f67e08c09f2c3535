#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lle/catalog.hpp"
#include "lle/diff_operator.hpp"

using namespace lle;

namespace {

std::mt19937_64 rng(0x5eed02);

Scalar random_simple_scalar() {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  Scalar base = Scalar(num(rng));
  switch (pick(rng)) {
    case 0: return base;
    case 1: return base * Scalar::i();
    case 2: return base * Scalar::m();
    default: return base * Scalar::s();
  }
}

DiffOperator random_operator(int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms), exp(0, 2), idx(0, 3);
  DiffOperator op;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial mono;
    mono.coord[idx(rng)] = static_cast<int16_t>(exp(rng));
    mono.deriv[idx(rng)] = static_cast<int16_t>(exp(rng));
    Mat4 mat = mat_zero();
    mat(idx(rng), idx(rng)) = random_simple_scalar();
    op.add_term(mono, mat);
  }
  return op;
}

}  // namespace

TEST_CASE("Heisenberg relation and Leibniz expansion") {
  DiffOperator t = DiffOperator::coordinate(0);
  DiffOperator dt = DiffOperator::derivative(0);
  // dt . t = t dt + 1
  CHECK(dt * t == t * dt + DiffOperator::identity());

  DiffOperator x1 = DiffOperator::coordinate(1);
  DiffOperator d1 = DiffOperator::derivative(1);
  DiffOperator lhs = (d1 * d1) * (x1 * x1);
  DiffOperator expected = (x1 * x1) * (d1 * d1) + Scalar(4) * (x1 * d1) + Scalar(2) * DiffOperator::identity();
  CHECK(lhs == expected);

  CHECK(commutator(d1, x1) == DiffOperator::identity());
}

TEST_CASE("omega squares to the free Schroedinger operator") {
  for (auto rep : {GammaRep::dirac(), GammaRep::chiral()}) {
    DiffOperator omega = build_lle(rep);
    DiffOperator omega2 = omega * omega;
    DiffOperator expected =
        (Scalar(-4) * Scalar::i() * Scalar::m()) * DiffOperator::derivative(0);
    for (int j = 1; j <= 3; ++j)
      expected += DiffOperator::term(Monomial::derivative(j, 2), mat_identity());
    CHECK(omega2 == expected);
  }
}

TEST_CASE("product associativity on random triples") {
  for (int iter = 0; iter < 200; ++iter) {
    DiffOperator a = random_operator(3), b = random_operator(3), c = random_operator(3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("bracket symmetries and bilinearity") {
  for (int iter = 0; iter < 100; ++iter) {
    DiffOperator a = random_operator(3), b = random_operator(3), c = random_operator(3);
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(anticommutator(a, b) == anticommutator(b, a));
    Scalar lambda = random_simple_scalar();
    CHECK(commutator(lambda * a + b, c) == lambda * commutator(a, c) + commutator(b, c));
    CHECK(anticommutator(lambda * a + b, c) ==
          lambda * anticommutator(a, c) + anticommutator(b, c));
  }
}

TEST_CASE("normal ordering is canonical: reassembly in any order agrees") {
  for (int iter = 0; iter < 50; ++iter) {
    DiffOperator a = random_operator(4), b = random_operator(4);
    DiffOperator ab = a * b;
    // accumulate the product term-by-term in reversed order
    DiffOperator acc;
    std::vector<std::pair<Monomial, Mat4>> parts;
    for (const auto& [mono, mat] : a.terms()) parts.emplace_back(mono, mat);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      acc += DiffOperator::term(it->first, it->second) * b;
    CHECK(acc == ab);
  }
}

TEST_CASE("graded bracket kind follows the degree dot product") {
  DiffOperator a = random_operator(2), b = random_operator(2);
  CHECK(graded_bracket(a, {0, 0}, b, {1, 1}) == commutator(a, b));
  CHECK(graded_bracket(a, {1, 1}, b, {1, 1}) == commutator(a, b));
  CHECK(graded_bracket(a, {0, 1}, b, {1, 0}) == commutator(a, b));
  CHECK(graded_bracket(a, {0, 1}, b, {1, 1}) == anticommutator(a, b));
  CHECK(graded_bracket(a, {1, 1}, a, {1, 1}).is_zero());
}

TEST_CASE("degree bookkeeping") {
  GammaRep rep = GammaRep::dirac();
  DiffOperator omega = build_lle(rep);
  CHECK(omega.max_derivative_order() == 1);
  CHECK(omega.max_coordinate_degree() == 0);
  CHECK(omega.is_constant_coefficient());
  DiffOperator k = GeneratorCatalog(rep).at("K");
  CHECK(k.max_coordinate_degree() == 2);
  CHECK(!k.is_constant_coefficient());
}

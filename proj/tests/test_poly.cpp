#include <doctest.h>

#include "spinline/poly.hpp"

using namespace spinline;

namespace {

const GaussianRational I = GaussianRational::i();

Poly from_ints(std::vector<long> coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(GaussianRational(c));
  return Poly::from_coeffs(v);
}

Poly reassemble(const Poly& original, const RootResult& r) {
  Poly prod = Poly::from_coeffs({original.lead()});
  for (const auto& root : r.roots) prod = prod * Poly::from_coeffs({-root, GaussianRational(1)});
  return prod * r.residual;
}

}  // namespace

TEST_CASE("x^2 + 1 splits over Q(i)") {
  Poly p = from_ints({1, 0, 1});
  RootResult r = gaussian_roots(p);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == -I);
  CHECK(r.roots[1] == I);
  CHECK(r.residual == Poly::one());
  CHECK(reassemble(p, r) == p);
}

TEST_CASE("x^2 - 2 has no Q(i) roots") {
  Poly p = from_ints({-2, 0, 1});
  RootResult r = gaussian_roots(p);
  CHECK(r.roots.empty());
  CHECK(r.residual == p);
}

TEST_CASE("multiplicity and zero roots: x (x - 2i)^2") {
  Poly p = Poly::from_coeffs({GaussianRational(0), GaussianRational(-4), GaussianRational::i(-4),
                              GaussianRational(1)});
  RootResult r = gaussian_roots(p);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == GaussianRational(0));
  CHECK(r.roots[1] == GaussianRational::i(2));
  CHECK(r.roots[2] == GaussianRational::i(2));
  CHECK(r.residual == Poly::one());
  CHECK(reassemble(p, r) == p);
}

TEST_CASE("zero polynomial rejected") {
  CHECK_THROWS_AS(gaussian_roots(Poly()), std::invalid_argument);
}

TEST_CASE("rational and Gaussian-rational roots with non-monic lead") {
  // 6 (x - 1/2) (x - (1+i)/3) (x^2 - 3)
  Poly p = Poly::from_coeffs({GaussianRational(rat(1, 2))});
  p = p * Poly::from_coeffs({GaussianRational(rat(-1, 2)), GaussianRational(1)});
  p = p * Poly::from_coeffs({GaussianRational(rat(-1, 3), rat(-1, 3)), GaussianRational(1)});
  p = p * from_ints({-3, 0, 1});
  p = Poly::from_coeffs({GaussianRational(12)}) * p;
  RootResult r = gaussian_roots(p);
  REQUIRE(r.roots.size() == 2);
  CHECK(reassemble(p, r) == p);
  CHECK(r.residual == from_ints({-3, 0, 1}));
}

TEST_CASE("random split polynomials reassemble exactly") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = Poly::from_coeffs({random_gaussian(rng, 3, 2)});
    if (p.is_zero()) p = Poly::one();
    int deg = 2 + static_cast<int>(rng.next() % 4);
    for (int k = 0; k < deg; ++k) {
      GaussianRational root = {rat(rng.range(-3, 3), rng.range(1, 2)),
                               rat(rng.range(-3, 3), rng.range(1, 2))};
      p = p * Poly::from_coeffs({-root, GaussianRational(1)});
    }
    RootResult r = gaussian_roots(p);
    CHECK(static_cast<int>(r.roots.size()) == deg);
    CHECK(r.residual == Poly::one());
    CHECK(reassemble(p, r) == p);
  }
}

TEST_CASE("evaluation and division agree") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    Vec coeffs;
    for (int k = 0; k < 5; ++k) coeffs.push_back(random_gaussian(rng, 4, 2));
    coeffs.push_back(GaussianRational(1));
    Poly p = Poly::from_coeffs(coeffs);
    GaussianRational at = random_gaussian(rng, 3, 2);
    GaussianRational rem;
    Poly q = p.divide_linear(at, &rem);
    CHECK(rem == p.eval(at));
    CHECK(q * Poly::from_coeffs({-at, GaussianRational(1)}) +
              Poly::from_coeffs({rem}) ==
          p);
  }
}

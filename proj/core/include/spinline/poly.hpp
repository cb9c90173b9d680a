#pragma once

#include <string>
#include <vector>

#include "spinline/rational.hpp"

namespace spinline {

// Polynomial over Q(i), coefficients lowest degree first, trimmed so the
// leading coefficient is nonzero; empty vector encodes the zero polynomial.
struct Poly {
  std::vector<GaussianRational> c;

  Poly() = default;
  static Poly from_coeffs(std::vector<GaussianRational> coeffs);
  static Poly one() { return from_coeffs({GaussianRational(1)}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  const GaussianRational& lead() const;

  GaussianRational eval(const GaussianRational& x) const;
  Poly monic() const;
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator+(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c == q.c; }

  // exact division by (x - r); the remainder is returned through *rem
  Poly divide_linear(const GaussianRational& r, GaussianRational* rem = nullptr) const;

  std::string pretty(const std::string& var = "x") const;
};

struct RootResult {
  std::vector<GaussianRational> roots;  // sorted, with multiplicity
  Poly residual;                        // monic cofactor with no Q(i) roots
};

// All roots of p lying in Q(i), with multiplicity, by Gaussian-integer
// rational root search on the primitive integer form plus repeated deflation.
// Guarantees p == lead(p) * prod(x - root) * residual exactly.
RootResult gaussian_roots(const Poly& p);

}  // namespace spinline

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinline {

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }
[[noreturn]] inline void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

// All scalars live in Q or Q(i), exactly. mpq_class keeps fractions reduced
// with positive denominators, which is the canonical form serialized below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// a + b*i with a, b rational. Field operations only; no ordering semantics
// beyond the lexicographic one used to make outputs deterministic.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i(long c = 1) { return {Rational(0), Rational(c)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) fail("GaussianRational: division by zero");
    Rational n = b.norm();
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Deterministic total order: lexicographic on (re, im).
inline int cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = ::cmp(a.re, b.re);
  return c != 0 ? c : ::cmp(a.im, b.im);
}
inline bool operator<(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) < 0; }

using Vec = std::vector<GaussianRational>;
using QVec = std::vector<Rational>;

inline Vec to_vec(const QVec& x) {
  Vec v;
  v.reserve(x.size());
  for (const auto& q : x) v.emplace_back(q);
  return v;
}

// Wire format "a/b+c/di": reduced terms, explicit signs and denominators,
// e.g. "1/2-3/1i", "0/1+1/1i". parse_scalar also accepts the obvious
// abbreviations (integers, "a/b", trailing "i" terms) for hand-written files.
std::string scalar_string(const GaussianRational& v);
std::string rational_string(const Rational& q);
GaussianRational parse_scalar(const std::string& text);
Rational parse_rational(const std::string& text);

// Deterministic generator for reproducible property checks (seeded, pure
// integer arithmetic, platform independent).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Rational random_rational(SplitMix64& rng, long max_num = 9, long max_den = 3);
GaussianRational random_gaussian(SplitMix64& rng, long max_num = 9, long max_den = 3);
Vec random_spinor(SplitMix64& rng, int dim);

}  // namespace spinline

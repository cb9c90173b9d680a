#include "spinline/poly.hpp"

#include <algorithm>
#include <map>

namespace spinline {

Poly Poly::from_coeffs(std::vector<GaussianRational> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  Poly p;
  p.c = std::move(coeffs);
  return p;
}

const GaussianRational& Poly::lead() const {
  if (is_zero()) fail("Poly::lead on zero polynomial");
  return c.back();
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) fail("Poly::monic on zero polynomial");
  std::vector<GaussianRational> out = c;
  GaussianRational inv = GaussianRational(1) / c.back();
  for (auto& v : out) v *= inv;
  return from_coeffs(std::move(out));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<GaussianRational> out(p.c.size() + q.c.size() - 1);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.c.size(); ++j) out[i + j] += p.c[i] * q.c[j];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<GaussianRational> out(std::max(p.c.size(), q.c.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < p.c.size()) out[k] += p.c[k];
    if (k < q.c.size()) out[k] += q.c[k];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly Poly::divide_linear(const GaussianRational& r, GaussianRational* rem) const {
  if (degree() < 1) fail("divide_linear: degree < 1");
  std::vector<GaussianRational> q(c.size() - 1);
  GaussianRational carry = c.back();
  for (int j = degree() - 1; j >= 0; --j) {
    q[j] = carry;
    carry = c[j] + r * carry;
  }
  if (rem) *rem = carry;
  return Poly::from_coeffs(std::move(q));
}

std::string Poly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + scalar_string(c[k]) + ")";
    if (k == 1) out += "*" + var;
    if (k > 1) out += "*" + var + "^" + std::to_string(k);
  }
  return out;
}

namespace {

// ---- Gaussian integers, just enough for rational root candidates ----

struct GInt {
  Integer a, b;  // a + b i
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  Integer norm() const { return a * a + b * b; }
  GInt conj() const { return {a, -b}; }
  friend GInt operator*(const GInt& x, const GInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend GInt operator-(const GInt& x, const GInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(const GInt& x, const GInt& y) { return x.a == y.a && x.b == y.b; }
};

Integer round_div(const Integer& n, const Integer& d) {
  // nearest integer to n/d, ties toward zero; exactness is irrelevant here,
  // any nearest-rounding makes the Euclidean algorithm terminate
  Integer two_n = 2 * n;
  Integer q = (two_n + (sgn(n) * sgn(d) >= 0 ? d : -d)) / (2 * d);
  return q;
}

// floor-style quotient with remainder of norm < norm(d)
GInt gdiv_round(const GInt& n, const GInt& d) {
  Integer nn = d.norm();
  GInt t = n * d.conj();
  return {round_div(t.a, nn), round_div(t.b, nn)};
}

bool gdivides(const GInt& d, const GInt& n, GInt* quot = nullptr) {
  Integer nn = d.norm();
  if (sgn(nn) == 0) return false;
  GInt t = n * d.conj();
  if (!mpz_divisible_p(t.a.get_mpz_t(), nn.get_mpz_t()) ||
      !mpz_divisible_p(t.b.get_mpz_t(), nn.get_mpz_t()))
    return false;
  if (quot) *quot = {t.a / nn, t.b / nn};
  return true;
}

GInt ggcd(GInt x, GInt y) {
  while (!y.is_zero()) {
    GInt q = gdiv_round(x, y);
    GInt r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
  // Brent's cycle variant; n must be odd composite
  Integer y = (seed % (n - 1)) + 1, c = (seed / 3 % (n - 1)) + 1, m = 128;
  Integer g = 1, r = 1, q = 1, x, ys;
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      Integer rem = r - k;
      Integer lim = rem < m ? rem : m;
      for (Integer i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_integer(Integer n, std::map<Integer, int>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  // trial division up to 10^4 first, then rho for whatever remains
  Integer p = 41;
  while (p * p <= n && p < 10000) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
      if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
      }
      continue;
    }
    p += 2;
  }
  if (n == 1) return;
  if (p * p > n || mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  unsigned long seed = 3;
  Integer d;
  do {
    d = pollard_brent(n, seed);
    seed += 2;
  } while (d == n);
  factor_integer(d, out);
  factor_integer(n / d, out);
}

// x with x^2 = -1 mod p, p prime = 1 mod 4
Integer sqrt_minus_one(const Integer& p) {
  Integer exp = (p - 1) / 4;
  for (Integer c = 2;; ++c) {
    Integer legendre;
    Integer half = (p - 1) / 2;
    mpz_powm(legendre.get_mpz_t(), c.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (legendre == p - 1) {
      Integer x;
      mpz_powm(x.get_mpz_t(), c.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
      return x;
    }
  }
}

// Gaussian prime factorization of z (unit discarded): list of (prime, exponent)
std::vector<std::pair<GInt, int>> gaussian_factor(GInt z) {
  std::vector<std::pair<GInt, int>> out;
  if (z.is_zero()) fail("gaussian_factor: zero");
  std::map<Integer, int> nf;
  factor_integer(z.norm(), nf);
  for (const auto& [p, e] : nf) {
    std::vector<GInt> primes;
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      primes.push_back({p, 0});
    } else {
      Integer x = sqrt_minus_one(p);
      GInt pi = ggcd({p, 0}, {x, 1});
      primes.push_back(pi);
      primes.push_back(pi.conj());
    }
    for (const GInt& pi : primes) {
      int cnt = 0;
      GInt q;
      while (gdivides(pi, z, &q)) {
        z = q;
        ++cnt;
      }
      if (cnt > 0) out.push_back({pi, cnt});
    }
  }
  return out;
}

// all divisors of z up to units
std::vector<GInt> gaussian_divisors(const GInt& z) {
  auto factors = gaussian_factor(z);
  std::vector<GInt> divs = {{1, 0}};
  for (const auto& [pi, e] : factors) {
    std::vector<GInt> next;
    next.reserve(divs.size() * (e + 1));
    for (const GInt& d : divs) {
      GInt cur = d;
      next.push_back(cur);
      for (int k = 1; k <= e; ++k) {
        cur = cur * pi;
        next.push_back(cur);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

GaussianRational gq(const GInt& z) {
  return {Rational(z.a), Rational(z.b)};
}

}  // namespace

RootResult gaussian_roots(const Poly& p) {
  if (p.is_zero()) bad_arg("gaussian_roots: zero polynomial");
  RootResult res;
  Poly work = p;

  // roots at 0
  std::size_t k = 0;
  while (k < work.c.size() && work.c[k].is_zero()) ++k;
  if (k > 0) {
    res.roots.assign(k, GaussianRational());
    std::vector<GaussianRational> rest(work.c.begin() + k, work.c.end());
    work = Poly::from_coeffs(std::move(rest));
  }

  if (work.degree() >= 1) {
    // scale to Z[i] to enumerate candidates p/q, p | a0, q | lead, up to units
    Integer scale = 1;
    for (const auto& v : work.c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.re.get_den().get_mpz_t());
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.im.get_den().get_mpz_t());
    }
    auto as_gint = [&](const GaussianRational& v) -> GInt {
      Rational re = v.re * scale, im = v.im * scale;
      return {re.get_num(), im.get_num()};
    };
    GInt a0 = as_gint(work.c.front());
    GInt lead = as_gint(work.c.back());

    std::vector<GaussianRational> candidates;
    const GaussianRational units[4] = {GaussianRational(1), GaussianRational::i(),
                                       GaussianRational(-1), GaussianRational::i(-1)};
    for (const GInt& num : gaussian_divisors(a0))
      for (const GInt& den : gaussian_divisors(lead))
        for (const auto& u : units) candidates.push_back(u * gq(num) / gq(den));
    std::sort(candidates.begin(), candidates.end(),
              [](const GaussianRational& x, const GaussianRational& y) { return cmp(x, y) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& cand : candidates) {
      while (work.degree() >= 1 && work.eval(cand).is_zero()) {
        work = work.divide_linear(cand);
        res.roots.push_back(cand);
      }
      if (work.degree() < 1) break;
    }
  }

  std::sort(res.roots.begin(), res.roots.end(),
            [](const GaussianRational& x, const GaussianRational& y) { return cmp(x, y) < 0; });
  res.residual = work.monic();
  return res;
}

}  // namespace spinline

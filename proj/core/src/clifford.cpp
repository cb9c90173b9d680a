#include "spinline/clifford.hpp"

namespace spinline {

Rational metric_pair(Signature sig, const QVec& x, const QVec& y) {
  if (static_cast<int>(x.size()) != sig.n() || static_cast<int>(y.size()) != sig.n())
    bad_arg("metric_pair: dimension mismatch");
  Rational g = 0;
  for (int i = 0; i < sig.n(); ++i) g += Rational(sig.metric(i)) * x[i] * y[i];
  return g;
}

int Bivector::pair_index(int dim, int i, int j) {
  if (i < 0 || j <= i || j >= dim) bad_arg("Bivector: bad index pair");
  // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

bool Bivector::is_zero() const {
  for (const auto& v : c)
    if (sgn(v) != 0) return false;
  return true;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  if (n != o.n) bad_arg("Bivector +: dimension mismatch");
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
  return *this;
}

Bivector operator*(const Rational& t, Bivector b) {
  for (auto& v : b.c) v *= t;
  return b;
}

Bivector wedge(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) bad_arg("wedge: dimension mismatch");
  Bivector b(static_cast<int>(x.size()));
  for (int i = 0; i < b.n; ++i)
    for (int j = i + 1; j < b.n; ++j) b.at(i, j) = x[i] * y[j] - x[j] * y[i];
  return b;
}

Matrix block_E() { return Matrix::identity(2); }

Matrix block_T() {
  Matrix m(2, 2);
  m.at(0, 1) = GaussianRational::i(-1);
  m.at(1, 0) = GaussianRational::i();
  return m;
}

Matrix block_U() {
  Matrix m(2, 2);
  m.at(0, 0) = GaussianRational::i();
  m.at(1, 1) = GaussianRational::i(-1);
  return m;
}

Matrix block_V() {
  Matrix m(2, 2);
  m.at(0, 1) = GaussianRational::i();
  m.at(1, 0) = GaussianRational::i();
  return m;
}

Vec u_spinor(int eps) {
  if (eps != 1 && eps != -1) bad_arg("u_spinor: eps must be +-1");
  return {GaussianRational(1), GaussianRational::i(-eps)};
}

namespace {

// chain of m factors, factor[0] leftmost (most significant)
Matrix kron_chain(const std::vector<Matrix>& factors) {
  Matrix out = Matrix::identity(1);
  for (const Matrix& f : factors) out = out.kron(f);
  return out;
}

// E x .. x E x (middle) x T x .. x T with t_count trailing T factors
Matrix pair_generator(int slots, int t_count, const Matrix& middle) {
  std::vector<Matrix> factors;
  for (int i = 0; i < slots - t_count - 1; ++i) factors.push_back(block_E());
  factors.push_back(middle);
  for (int i = 0; i < t_count; ++i) factors.push_back(block_T());
  return kron_chain(factors);
}

}  // namespace

CliffordRep build_rep(Signature sig, int odd_branch) {
  if (sig.n() < 1) bad_arg("build_rep: need n >= 1");
  if (sig.r < 0 || sig.s < 0) bad_arg("build_rep: negative signature");
  if (odd_branch != 1 && odd_branch != -1) bad_arg("build_rep: odd_branch must be +-1");
  int n = sig.n();
  int slots = n / 2;
  CliffordRep rep;
  rep.sig = sig;
  rep.dim = 1 << slots;
  rep.odd_branch = odd_branch;

  auto tau = [&](int i) {  // 0-based frame index
    return i < sig.r ? GaussianRational::i() : GaussianRational(1);
  };

  int even_part = n - (n % 2);
  for (int idx = 0; idx < even_part; ++idx) {
    int k = idx / 2 + 1;  // pair number, acts on tensor slot k
    const Matrix middle = (idx % 2 == 0) ? block_U() : block_V();
    rep.gen.push_back(tau(idx) * pair_generator(slots, k - 1, middle));
  }
  if (n % 2 == 1) {
    std::vector<Matrix> factors(slots, block_T());
    Matrix t_chain = kron_chain(factors);
    rep.gen.push_back((GaussianRational::i(odd_branch) * tau(n - 1)) * t_chain);
  }
  return rep;
}

void verify_clifford_relations(const CliffordRep& rep) {
  int n = rep.sig.n();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Matrix anti = rep.gen[i] * rep.gen[j] + rep.gen[j] * rep.gen[i];
      Matrix expect(rep.dim, rep.dim);
      if (i == j)
        expect = GaussianRational(-2 * rep.sig.metric(i)) * Matrix::identity(rep.dim);
      if (!(anti == expect))
        fail("Clifford relation violated at pair (" + std::to_string(i) + "," +
             std::to_string(j) + ") for signature (" + std::to_string(rep.sig.r) + "," +
             std::to_string(rep.sig.s) + ")");
    }
}

int SpinorIndex::index() const {
  int idx = 0;
  for (std::size_t slot = 0; slot < epsilons.size(); ++slot) {
    int e = epsilons[slot];
    if (e != 1 && e != -1) bad_arg("SpinorIndex: eps must be +-1");
    if (e == -1) idx |= 1 << slot;
  }
  return idx;
}

SpinorIndex SpinorIndex::from_index(int index, int slots) {
  SpinorIndex s;
  s.epsilons.resize(slots);
  for (int slot = 0; slot < slots; ++slot) s.epsilons[slot] = (index >> slot) & 1 ? -1 : 1;
  return s;
}

int SpinorIndex::sign_product() const {
  int p = 1;
  for (int e : epsilons) p *= e;
  return p;
}

Vec spinor_basis_vector(const SpinorIndex& idx) {
  int slots = static_cast<int>(idx.epsilons.size());
  Vec v = {GaussianRational(1)};
  for (int slot = slots - 1; slot >= 0; --slot) {
    Vec u = u_spinor(idx.epsilons[slot]);
    Vec next(v.size() * 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * u[0];
      next[2 * i + 1] = v[i] * u[1];
    }
    v = std::move(next);
  }
  return v;
}

Matrix vector_action(const CliffordRep& rep, const QVec& x) {
  if (static_cast<int>(x.size()) != rep.sig.n()) bad_arg("vector_action: dimension mismatch");
  Matrix out(rep.dim, rep.dim);
  for (int i = 0; i < rep.sig.n(); ++i) {
    if (sgn(x[i]) == 0) continue;
    out += GaussianRational(x[i]) * rep.gen[i];
  }
  return out;
}

Matrix two_form_action(const CliffordRep& rep, const Bivector& w) {
  if (w.n != rep.sig.n()) bad_arg("two_form_action: dimension mismatch");
  Matrix out(rep.dim, rep.dim);
  for (int i = 0; i < w.n; ++i)
    for (int j = i + 1; j < w.n; ++j) {
      const Rational& c = w.at(i, j);
      if (sgn(c) == 0) continue;
      out += GaussianRational(c) * (rep.gen[i] * rep.gen[j]);
    }
  return out;
}

std::pair<Subspace, Subspace> half_spinor_split(const CliffordRep& rep) {
  if (rep.sig.n() % 2 != 0) bad_arg("half_spinor_split: odd n has an irreducible module");
  int slots = rep.sig.n() / 2;
  std::vector<Vec> plus_rows, minus_rows;
  for (int idx = 0; idx < rep.dim; ++idx) {
    SpinorIndex si = SpinorIndex::from_index(idx, slots);
    (si.sign_product() > 0 ? plus_rows : minus_rows).push_back(spinor_basis_vector(si));
  }
  return {Subspace::row_span(Matrix::from_rows(plus_rows)),
          Subspace::row_span(Matrix::from_rows(minus_rows))};
}

WittFrame witt_frame(Signature sig, WittFrame::Kind kind) {
  WittFrame w;
  w.kind = kind;
  w.sig = sig;
  int n = sig.n();
  if (kind == WittFrame::Kind::lorentz) {
    if (sig.r != 1 || sig.s < 1) bad_arg("witt_frame: lorentz frame needs signature (1, s>=1)");
    w.p.assign(n, Rational(0));
    w.q.assign(n, Rational(0));
    w.p[0] = 1;  // e_- + e_+
    w.p[1] = 1;
    w.q[0] = rat(-1, 2);  // (e_+ - e_-)/2
    w.q[1] = rat(1, 2);
  } else {
    if (sig.r != sig.s) bad_arg("witt_frame: neutral frame needs signature (n, n)");
    int m = sig.r;
    for (int i = 0; i < m; ++i) {
      QVec e(n, Rational(0)), es(n, Rational(0));
      e[m + i] = 1;  // spacelike + timelike partner
      e[i] = 1;
      es[m + i] = rat(1, 2);
      es[i] = rat(-1, 2);
      w.e.push_back(std::move(e));
      w.e_star.push_back(std::move(es));
    }
  }
  return w;
}

Vec LorentzSplit::embed(const Vec& w, int eps) const {
  if (static_cast<int>(w.size()) != dim_small) bad_arg("embed: dimension mismatch");
  Vec u = u_spinor(eps);
  Vec out(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[2 * i] = w[i] * u[0];
    out[2 * i + 1] = w[i] * u[1];
  }
  return out;
}

LorentzSplit lorentz_split(const CliffordRep& rep) {
  if (rep.sig.r != 1 || rep.sig.s < 1) bad_arg("lorentz_split: signature must be (1, n+1)");
  LorentzSplit ls;
  ls.slot = 1;
  ls.dim_small = rep.dim / 2;
  std::vector<Vec> plus_rows, minus_rows;
  for (int i = 0; i < ls.dim_small; ++i) {
    Vec w(ls.dim_small);
    w[i] = GaussianRational(1);
    plus_rows.push_back(ls.embed(w, +1));
    minus_rows.push_back(ls.embed(w, -1));
  }
  ls.plus = Subspace::row_span(Matrix::from_rows(plus_rows));
  ls.minus = Subspace::row_span(Matrix::from_rows(minus_rows));
  return ls;
}

}  // namespace spinline

#include "spinline/holonomy.hpp"

#include <algorithm>
#include <functional>

namespace spinline {

namespace {

Vec biv_to_vec(const Bivector& b) {
  Vec v;
  v.reserve(b.c.size());
  for (const auto& q : b.c) v.emplace_back(q);
  return v;
}

Bivector vec_to_biv(int n, const Vec& v) {
  Bivector b(n);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_real()) fail("bivector coefficients must be real");
    b.c[k] = v[k].re;
  }
  return b;
}

}  // namespace

Matrix so_matrix_of(Signature sig, const Bivector& b) {
  int n = sig.n();
  if (b.n != n) bad_arg("so_matrix_of: dimension mismatch");
  Matrix m(n, n);
  // (e_i ^ e_j) e_l = k_i d_il e_j - k_j d_jl e_i
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational& w = b.at(i, j);
      if (sgn(w) == 0) continue;
      m.at(j, i) += GaussianRational(w * sig.metric(i));
      m.at(i, j) -= GaussianRational(w * sig.metric(j));
    }
  return m;
}

SoElement so_from_bivector(Signature sig, Bivector b) {
  SoElement e;
  e.sig = sig;
  e.mat = so_matrix_of(sig, b);
  e.biv = std::move(b);
  return e;
}

SoElement so_from_matrix(Signature sig, const Matrix& m) {
  int n = sig.n();
  if (m.rows != n || m.cols != n) bad_arg("so_from_matrix: dimension mismatch");
  if (!m.is_real()) bad_arg("so_from_matrix: matrix must be real");
  Bivector b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.at(i, j) = Rational(sig.metric(i)) * m.at(j, i).re;
  if (!(so_matrix_of(sig, b) == m)) bad_arg("so_from_matrix: matrix is not g-skew");
  return so_from_bivector(sig, std::move(b));
}

SoElement so_bracket(const SoElement& x, const SoElement& y) {
  if (!(x.sig == y.sig)) bad_arg("so_bracket: signature mismatch");
  return so_from_matrix(x.sig, bracket(x.mat, y.mat));
}

LieAlgebraRep so_basis(Signature sig) {
  LieAlgebraRep g;
  g.name = "so:" + std::to_string(sig.r) + "," + std::to_string(sig.s);
  g.sig = sig;
  int n = sig.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Bivector b(n);
      b.at(i, j) = 1;
      g.gen.push_back(so_from_bivector(sig, std::move(b)));
    }
  return g;
}

Matrix lambda_star(const CliffordRep& rep, const Bivector& b, Normalization norm) {
  if (b.n != rep.sig.n()) bad_arg("lambda_star: dimension mismatch");
  Matrix m = two_form_action(rep, b);
  if (norm == Normalization::half) m = GaussianRational(rat(1, 2)) * m;
  return m;
}

Matrix lambda_star(const CliffordRep& rep, const SoElement& a, Normalization norm) {
  if (!(a.sig == rep.sig)) bad_arg("lambda_star: signature mismatch");
  return lambda_star(rep, a.biv, norm);
}

std::vector<Matrix> lambda_images(const CliffordRep& rep, const LieAlgebraRep& g,
                                  Normalization norm) {
  std::vector<Matrix> out;
  out.reserve(g.gen.size());
  for (const auto& a : g.gen) out.push_back(lambda_star(rep, a, norm));
  return out;
}

Matrix standard_complex_structure(Signature sig) {
  if (sig.r % 2 != 0 || sig.s % 2 != 0) bad_arg("complex structure needs signature (2p, 2q)");
  int n = sig.n();
  Matrix j(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    j.at(i + 1, i) = GaussianRational(1);
    j.at(i, i + 1) = GaussianRational(-1);
  }
  return j;
}

std::pair<Matrix, Matrix> quaternionic_structures(Signature sig) {
  if (sig.r % 4 != 0 || sig.s % 4 != 0) bad_arg("quaternionic structure needs signature (4p, 4q)");
  int n = sig.n();
  Matrix j2(n, n);
  for (int b = 0; b < n; b += 4) {
    j2.at(b + 2, b) = GaussianRational(1);
    j2.at(b, b + 2) = GaussianRational(-1);
    j2.at(b + 3, b + 1) = GaussianRational(-1);
    j2.at(b + 1, b + 3) = GaussianRational(1);
  }
  return {standard_complex_structure(sig), j2};
}

namespace {

// Solve {A in so : op(M_A) = 0} over the bivector coordinates; op maps an
// so-matrix to any matrix whose vanishing is the linear condition.
LieAlgebraRep solve_in_so(Signature sig, const std::string& name,
                          const std::vector<std::function<Matrix(const Matrix&)>>& conditions) {
  int n = sig.n();
  int nb = Bivector::pair_count(n);
  std::vector<Matrix> basis_mats;
  basis_mats.reserve(nb);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Bivector b(n);
      b.at(i, j) = 1;
      basis_mats.push_back(so_matrix_of(sig, b));
    }

  std::vector<Vec> cols;  // one column of constraints per bivector coordinate
  cols.reserve(nb);
  int total_rows = 0;
  for (int k = 0; k < nb; ++k) {
    Vec col;
    for (const auto& cond : conditions) {
      Matrix c = cond(basis_mats[k]);
      col.insert(col.end(), c.a.begin(), c.a.end());
    }
    total_rows = static_cast<int>(col.size());
    cols.push_back(std::move(col));
  }
  Matrix system(total_rows, nb);
  for (int k = 0; k < nb; ++k)
    for (int r = 0; r < total_rows; ++r) system.at(r, k) = cols[k][r];

  Subspace sol = kernel(system);
  LieAlgebraRep g;
  g.name = name;
  g.sig = sig;
  for (int t = 0; t < sol.dim(); ++t)
    g.gen.push_back(so_from_bivector(sig, vec_to_biv(n, sol.basis.row(t))));
  return g;
}

}  // namespace

LieAlgebraRep unitary_family(UnitaryKind kind, int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) bad_arg("unitary_family: need p + q >= 1");
  int scale = kind == UnitaryKind::sp ? 4 : 2;
  Signature sig{scale * p, scale * q};
  std::string prefix = kind == UnitaryKind::u ? "u" : kind == UnitaryKind::su ? "su" : "sp";
  std::string name = prefix + ":" + std::to_string(p) + "," + std::to_string(q);

  std::vector<std::function<Matrix(const Matrix&)>> conds;
  int expected = 0;
  if (kind == UnitaryKind::sp) {
    auto [j1, j2] = quaternionic_structures(sig);
    conds.push_back([j1](const Matrix& m) { return bracket(m, j1); });
    conds.push_back([j2](const Matrix& m) { return bracket(m, j2); });
    int k = p + q;
    expected = k * (2 * k + 1);
  } else {
    Matrix j = standard_complex_structure(sig);
    conds.push_back([j](const Matrix& m) { return bracket(m, j); });
    if (kind == UnitaryKind::su) {
      conds.push_back([j](const Matrix& m) {
        Matrix t(1, 1);
        t.at(0, 0) = (j * m).trace();
        return t;
      });
    }
    int m = p + q;
    expected = kind == UnitaryKind::u ? m * m : m * m - 1;
  }
  LieAlgebraRep g = solve_in_so(sig, name, conds);
  if (g.dim() != expected)
    fail(name + ": centralizer dimension " + std::to_string(g.dim()) + ", expected " +
         std::to_string(expected));
  g.metadata["family"] = prefix;
  return g;
}

namespace {

CalibrationForm make_form(std::string name, Signature sig, int degree,
                          std::vector<std::pair<std::vector<int>, int>> terms, int expected) {
  CalibrationForm f;
  f.name = std::move(name);
  f.sig = sig;
  f.degree = degree;
  for (auto& [idx, c] : terms) f.terms.push_back({idx, Rational(c)});
  f.expected_dim = expected;
  return f;
}

}  // namespace

CalibrationForm g2_form() {
  return make_form("g2", {0, 7}, 3,
                   {{{0, 1, 2}, 1},
                    {{0, 3, 4}, 1},
                    {{0, 5, 6}, 1},
                    {{1, 3, 5}, 1},
                    {{1, 4, 6}, -1},
                    {{2, 3, 6}, -1},
                    {{2, 4, 5}, -1}},
                   14);
}

CalibrationForm g2_split_form() {
  // sign-flipped on the terms meeting the timelike set in two indices
  return make_form("g2split", {3, 4}, 3,
                   {{{0, 1, 2}, 1},
                    {{0, 3, 4}, -1},
                    {{0, 5, 6}, -1},
                    {{1, 3, 5}, -1},
                    {{1, 4, 6}, 1},
                    {{2, 3, 6}, 1},
                    {{2, 4, 5}, 1}},
                   14);
}

CalibrationForm cayley_form() {
  // phi ^ e7 + *phi for the g2 3-form phi on the first seven coordinates
  return make_form("spin7", {0, 8}, 4,
                   {{{0, 1, 2, 7}, 1},
                    {{0, 3, 4, 7}, 1},
                    {{0, 5, 6, 7}, 1},
                    {{1, 3, 5, 7}, 1},
                    {{1, 4, 6, 7}, -1},
                    {{2, 3, 6, 7}, -1},
                    {{2, 4, 5, 7}, -1},
                    {{3, 4, 5, 6}, 1},
                    {{1, 2, 5, 6}, 1},
                    {{1, 2, 3, 4}, 1},
                    {{0, 2, 4, 6}, 1},
                    {{0, 2, 3, 5}, -1},
                    {{0, 1, 4, 5}, -1},
                    {{0, 1, 3, 6}, -1}},
                   21);
}

CalibrationForm cayley_split_form() {
  return make_form("spin34", {4, 4}, 4,
                   {{{4, 5, 6, 7}, 1},
                    {{0, 1, 4, 7}, -1},
                    {{2, 3, 4, 7}, -1},
                    {{0, 2, 5, 7}, -1},
                    {{1, 3, 5, 7}, 1},
                    {{0, 3, 6, 7}, 1},
                    {{1, 2, 6, 7}, 1},
                    {{0, 1, 2, 3}, 1},
                    {{2, 3, 5, 6}, -1},
                    {{0, 1, 5, 6}, -1},
                    {{1, 3, 4, 6}, -1},
                    {{0, 2, 4, 6}, 1},
                    {{1, 2, 4, 5}, 1},
                    {{0, 3, 4, 5}, 1}},
                   21);
}

namespace {

// coefficients of a k-form as a dense vector over sorted index tuples
struct FormIndexer {
  int n, k;
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> rank;

  FormIndexer(int n_, int k_) : n(n_), k(k_) {
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        rank[cur] = static_cast<int>(tuples.size());
        tuples.push_back(cur);
        return;
      }
      for (int v = start; v < n; ++v) {
        cur[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
};

// derivation action of A on the coefficient vector: A . e^j = -sum_m A[j][m] e^m
Vec form_action(const FormIndexer& ix, const Matrix& a, const Vec& phi) {
  Vec out(phi.size());
  for (std::size_t t = 0; t < ix.tuples.size(); ++t) {
    if (phi[t].is_zero()) continue;
    const auto& tuple = ix.tuples[t];
    for (int pos = 0; pos < ix.k; ++pos) {
      int j = tuple[pos];
      for (int m = 0; m < ix.n; ++m) {
        if (a.at(j, m).is_zero()) continue;
        std::vector<int> nt = tuple;
        nt[pos] = m;
        // sort with sign; repeated index kills the term
        int sign = 1;
        bool dup = false;
        for (int x = 0; x < ix.k && !dup; ++x)
          for (int y = x + 1; y < ix.k; ++y) {
            if (nt[x] == nt[y]) {
              dup = true;
              break;
            }
            if (nt[x] > nt[y]) {
              std::swap(nt[x], nt[y]);
              sign = -sign;
            }
          }
        if (dup) continue;
        GaussianRational delta = GaussianRational(-sign) * a.at(j, m) * phi[t];
        out[ix.rank.at(nt)] += delta;
      }
    }
  }
  return out;
}

}  // namespace

LieAlgebraRep form_stabilizer(Signature sig, const CalibrationForm& form) {
  int n = sig.n();
  FormIndexer ix(n, form.degree);
  Vec phi(ix.tuples.size());
  for (const auto& [tuple, coeff] : form.terms) {
    auto it = ix.rank.find(tuple);
    if (it == ix.rank.end()) bad_arg("form_stabilizer: bad index tuple in form");
    phi[it->second] += GaussianRational(coeff);
  }

  int nb = Bivector::pair_count(n);
  Matrix system(static_cast<int>(ix.tuples.size()), nb);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col) {
      Bivector b(n);
      b.at(i, j) = 1;
      Vec moved = form_action(ix, so_matrix_of(sig, b), phi);
      for (std::size_t r = 0; r < moved.size(); ++r) system.at(static_cast<int>(r), col) = moved[r];
    }

  Subspace sol = kernel(system);
  LieAlgebraRep g;
  g.name = form.name;
  g.sig = sig;
  for (int t = 0; t < sol.dim(); ++t)
    g.gen.push_back(so_from_bivector(sig, vec_to_biv(n, sol.basis.row(t))));
  g.metadata["form_degree"] = std::to_string(form.degree);
  if (form.expected_dim >= 0) {
    g.metadata["expected_dim"] = std::to_string(form.expected_dim);
    if (g.dim() > form.expected_dim) g.metadata["degenerate"] = "true";
  }
  return g;
}

std::optional<QVec> coordinates_in(const LieAlgebraRep& g, const SoElement& x) {
  if (!(g.sig == x.sig)) bad_arg("coordinates_in: signature mismatch");
  int nb = Bivector::pair_count(g.sig.n());
  Matrix a(nb, g.dim());
  for (int c = 0; c < g.dim(); ++c)
    for (int r = 0; r < nb; ++r) a.at(r, c) = GaussianRational(g.gen[c].biv.c[r]);
  Vec b = biv_to_vec(x.biv);
  auto sol = solve_linear(a, b);
  if (!sol) return std::nullopt;
  QVec out;
  out.reserve(sol->size());
  for (const auto& v : *sol) {
    if (!v.is_real()) return std::nullopt;
    out.push_back(v.re);
  }
  return out;
}

namespace {

void check_sim_params(const SimParams& p) {
  if (p.type < 1 || p.type > 4) bad_arg("sim_algebra: type must be 1..4");
  if (p.n < 1) bad_arg("sim_algebra: need n >= 1");
  int hn = p.h.sig.n();
  if (p.h.sig.r != 0) bad_arg("sim_algebra: h must live in a definite so(0,m)");
  if (p.type == 4) {
    if (p.m <= 0 || p.m >= p.n) bad_arg("sim_algebra: type 4 needs 0 < m < n");
    if (hn != p.m) bad_arg("sim_algebra: type 4 needs h inside so(m)");
  } else if (hn != p.n) {
    bad_arg("sim_algebra: h must live in so(n)");
  }
}

}  // namespace

std::vector<Rational> canonical_phi(const LieAlgebraRep& h) {
  LieAlgebraRep der = derived_algebra(h);
  Matrix constraints(der.dim(), h.dim());
  for (int i = 0; i < der.dim(); ++i) {
    auto coords = coordinates_in(h, der.gen[i]);
    if (!coords) fail("canonical_phi: derived algebra escapes the generator span");
    for (int j = 0; j < h.dim(); ++j) constraints.at(i, j) = GaussianRational((*coords)[j]);
  }
  Subspace sol = kernel(constraints);
  if (sol.is_zero()) bad_arg("canonical_phi: h is perfect, no nonzero functional kills [h,h]");
  std::vector<Rational> phi;
  for (int j = 0; j < h.dim(); ++j) {
    const GaussianRational& v = sol.basis.at(0, j);
    phi.push_back(v.re);
  }
  return phi;
}

std::vector<std::vector<Rational>> canonical_psi(const LieAlgebraRep& h, int codim) {
  LieAlgebraRep der = derived_algebra(h);
  Matrix constraints(der.dim(), h.dim());
  for (int i = 0; i < der.dim(); ++i) {
    auto coords = coordinates_in(h, der.gen[i]);
    if (!coords) fail("canonical_psi: derived algebra escapes the generator span");
    for (int j = 0; j < h.dim(); ++j) constraints.at(i, j) = GaussianRational((*coords)[j]);
  }
  Subspace sol = kernel(constraints);
  if (sol.dim() < codim)
    bad_arg("canonical_psi: center too small for a surjection onto R^" + std::to_string(codim));
  std::vector<std::vector<Rational>> psi;
  for (int r = 0; r < codim; ++r) {
    std::vector<Rational> row;
    for (int j = 0; j < h.dim(); ++j) row.push_back(sol.basis.at(r, j).re);
    psi.push_back(std::move(row));
  }
  return psi;
}

LieAlgebraRep sim_algebra(const SimParams& p) {
  check_sim_params(p);
  ClosureCheck hc = lie_closure_check(p.h);
  if (!hc.closed)
    bad_arg("sim_algebra: h is not bracket-closed (offending pair " + std::to_string(hc.i) + "," +
            std::to_string(hc.j) + ")");
  Signature ambient{1, p.n + 1};
  int an = ambient.n();

  // frame: 0 = e_-, 1 = e_+, 2.. = the spacelike R^n; p = e_- + e_+
  auto triple_bivector = [&](const Rational& a, const Bivector* hpart, const QVec& x) {
    Bivector b(an);
    b.at(0, 1) = -a;  // -a p^q, p^q = e_- ^ e_+
    if (hpart)
      for (int i = 0; i < hpart->n; ++i)
        for (int j = i + 1; j < hpart->n; ++j) b.at(i + 2, j + 2) = hpart->at(i, j);
    for (int i = 0; i < p.n; ++i) {
      if (sgn(x[i]) == 0) continue;
      b.at(0, i + 2) -= x[i];  // -p ^ X
      b.at(1, i + 2) -= x[i];
    }
    return b;
  };

  LieAlgebraRep der = derived_algebra(p.h);
  auto vanishes_on_derived = [&](const std::vector<Rational>& functional) {
    for (int i = 0; i < der.dim(); ++i) {
      auto coords = coordinates_in(p.h, der.gen[i]);
      if (!coords) fail("sim_algebra: derived algebra escapes the generator span");
      Rational acc = 0;
      for (int j = 0; j < p.h.dim(); ++j) acc += functional[j] * (*coords)[j];
      if (sgn(acc) != 0) return false;
    }
    return true;
  };

  LieAlgebraRep g;
  g.sig = ambient;
  QVec zero_x(p.n, Rational(0));

  if (p.type == 3) {
    if (static_cast<int>(p.phi.size()) != p.h.dim())
      bad_arg("sim_algebra: phi must have one coefficient per h generator");
    bool nonzero = std::any_of(p.phi.begin(), p.phi.end(),
                               [](const Rational& v) { return sgn(v) != 0; });
    if (!nonzero) bad_arg("sim_algebra: type 3 needs phi != 0");
    if (!vanishes_on_derived(p.phi)) bad_arg("sim_algebra: phi must vanish on [h,h]");
  }
  if (p.type == 4) {
    if (static_cast<int>(p.psi.size()) != p.n - p.m)
      bad_arg("sim_algebra: psi must map onto R^(n-m)");
    std::vector<Vec> rows;
    for (const auto& row : p.psi) {
      if (static_cast<int>(row.size()) != p.h.dim())
        bad_arg("sim_algebra: psi must have one column per h generator");
      if (!vanishes_on_derived(row)) bad_arg("sim_algebra: psi must vanish on [h,h]");
      rows.push_back(to_vec(row));
    }
    if (rref(Matrix::from_rows(rows)).rank != p.n - p.m)
      bad_arg("sim_algebra: psi must be surjective");
  }

  if (p.type == 1) g.gen.push_back(so_from_bivector(ambient, triple_bivector(1, nullptr, zero_x)));

  for (int t = 0; t < p.h.dim(); ++t) {
    // embed the h bivector into the spacelike block
    Bivector hb(p.h.sig.n() == p.n ? p.h.gen[t].biv : [&] {
      Bivector wide(p.n);
      for (int i = 0; i < p.m; ++i)
        for (int j = i + 1; j < p.m; ++j) wide.at(i, j) = p.h.gen[t].biv.at(i, j);
      return wide;
    }());
    Rational a = 0;
    QVec x = zero_x;
    if (p.type == 3) a = p.phi[t];
    if (p.type == 4)
      for (int rr = 0; rr < p.n - p.m; ++rr) x[p.m + rr] = p.psi[rr][t];
    g.gen.push_back(so_from_bivector(ambient, triple_bivector(a, &hb, x)));
  }

  int translations = p.type == 4 ? p.m : p.n;
  for (int i = 0; i < translations; ++i) {
    QVec x = zero_x;
    x[i] = 1;
    g.gen.push_back(so_from_bivector(ambient, triple_bivector(0, nullptr, x)));
  }

  g.name = "sim:type=" + std::to_string(p.type) + ",h=" + p.h.name + ",n=" + std::to_string(p.n) +
           (p.type == 4 ? ",m=" + std::to_string(p.m) : "");
  g.metadata["type"] = std::to_string(p.type);
  g.metadata["h"] = p.h.name;
  g.metadata["n"] = std::to_string(p.n);
  if (p.type == 3) {
    std::string s;
    for (const auto& v : p.phi) s += (s.empty() ? "" : ",") + rational_string(v);
    g.metadata["phi"] = s;
  }
  if (p.type == 4) {
    g.metadata["m"] = std::to_string(p.m);
    std::string s;
    for (const auto& row : p.psi) {
      s += s.empty() ? "[" : ";[";
      for (std::size_t j = 0; j < row.size(); ++j)
        s += (j ? "," : "") + rational_string(row[j]);
      s += "]";
    }
    g.metadata["psi"] = s;
  }

  ClosureCheck cc = lie_closure_check(g);
  if (!cc.closed) fail("sim_algebra: construction is not bracket-closed (internal error)");
  return g;
}

LieAlgebraRep neutral_algebra(NeutralKind kind, int n) {
  if (n < 1) bad_arg("neutral_algebra: need n >= 1");
  Signature sig{n, n};
  WittFrame w = witt_frame(sig, WittFrame::Kind::neutral);
  auto block_gen = [&](const Matrix& b) {
    // diag(B, -B^T) corresponds to -sum B_ik e_i ^ e*_k
    Bivector acc(sig.n());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (b.at(i, k).is_zero()) continue;
        acc += (-b.at(i, k).re) * wedge(w.e[i], w.e_star[k]);
      }
    return so_from_bivector(sig, std::move(acc));
  };

  LieAlgebraRep g;
  g.sig = sig;
  g.name = (kind == NeutralKind::gl ? "neutral-gl:" : "neutral-sl:") + std::to_string(n);
  g.metadata["block"] = kind == NeutralKind::gl ? "gl" : "sl";
  if (kind == NeutralKind::gl) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Matrix b(n, n);
        b.at(i, k) = GaussianRational(1);
        g.gen.push_back(block_gen(b));
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (i == k) continue;
        Matrix b(n, n);
        b.at(i, k) = GaussianRational(1);
        g.gen.push_back(block_gen(b));
      }
    for (int i = 0; i + 1 < n; ++i) {
      Matrix b(n, n);
      b.at(i, i) = GaussianRational(1);
      b.at(i + 1, i + 1) = GaussianRational(-1);
      g.gen.push_back(block_gen(b));
    }
  }
  return g;
}

LieAlgebraRep derived_algebra(const LieAlgebraRep& g) {
  int nb = Bivector::pair_count(g.sig.n());
  SpanBuilder span(nb);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      span.add(biv_to_vec(so_bracket(g.gen[i], g.gen[j]).biv));
  std::vector<Vec> rows = span.echelon;
  LieAlgebraRep d;
  d.name = "[" + g.name + "," + g.name + "]";
  d.sig = g.sig;
  if (!rows.empty()) {
    Subspace s = Subspace::row_span(Matrix::from_rows(rows));
    for (int t = 0; t < s.dim(); ++t)
      d.gen.push_back(so_from_bivector(g.sig, vec_to_biv(g.sig.n(), s.basis.row(t))));
  }
  return d;
}

ClosureCheck lie_closure_check(const LieAlgebraRep& g) {
  int nb = Bivector::pair_count(g.sig.n());
  SpanBuilder span(nb);
  for (const auto& e : g.gen) span.add(biv_to_vec(e.biv));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Vec residual;
      if (!span.contains(biv_to_vec(so_bracket(g.gen[i], g.gen[j]).biv), &residual)) {
        ClosureCheck cc;
        cc.closed = false;
        cc.i = i;
        cc.j = j;
        cc.residual = so_matrix_of(g.sig, vec_to_biv(g.sig.n(), residual));
        return cc;
      }
    }
  return {};
}

}  // namespace spinline

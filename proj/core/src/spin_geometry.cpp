#include "spinline/spin_geometry.hpp"

#include <algorithm>

namespace spinline {

namespace {

bool is_hermitian(const Matrix& m) { return m.conj_transpose() == m; }

}  // namespace

HermitianForm hermitian_form(const CliffordRep& rep) {
  if (rep.sig.r > 1) bad_arg("hermitian_form: only r in {0, 1} supported");
  HermitianForm form;
  form.sig = rep.sig;
  form.beta = rep.sig.r == 0 ? Matrix::identity(rep.dim) : rep.gen[0];
  if (!is_hermitian(form.beta)) fail("hermitian_form: beta is not Hermitian");

  // spin invariance of the half-scale images over the so basis
  LieAlgebraRep so = so_basis(rep.sig);
  for (const auto& a : so.gen) {
    Matrix lam = lambda_star(rep, a, Normalization::half);
    Matrix lhs = lam.conj_transpose() * form.beta + form.beta * lam;
    if (!lhs.is_zero()) fail("hermitian_form: product is not spin invariant");
  }

  if (rep.sig.r == 1) {
    // <X.u, v> = kappa <u, X.v>  <=>  gen^dagger beta = kappa beta gen
    int kappa = 0;
    for (int i = 0; i < rep.sig.n(); ++i) {
      Matrix lhs = rep.gen[i].conj_transpose() * form.beta;
      Matrix rhs = form.beta * rep.gen[i];
      int this_kappa;
      if (lhs == rhs)
        this_kappa = 1;
      else if (lhs == GaussianRational(-1) * rhs)
        this_kappa = -1;
      else
        fail("hermitian_form: frame vector is neither self- nor anti-self-adjoint");
      if (kappa == 0) kappa = this_kappa;
      if (kappa != this_kappa) fail("hermitian_form: self-adjointness sign is not uniform");
    }
    form.kappa = kappa;
  }
  return form;
}

GaussianRational herm_inner(const HermitianForm& form, const Vec& u, const Vec& v) {
  Vec bu = act(form.beta, u);
  if (bu.size() != v.size()) bad_arg("herm_inner: dimension mismatch");
  GaussianRational acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += bu[i].conj() * v[i];
  return acc;
}

DiracCurrent dirac_current(const CliffordRep& rep, const HermitianForm& form, const Vec& s) {
  if (rep.sig.r != 1) bad_arg("dirac_current: needs Lorentzian signature (1, n+1)");
  if (!(form.sig == rep.sig)) bad_arg("dirac_current: form/rep signature mismatch");
  DiracCurrent p;
  int n = rep.sig.n();
  p.components.reserve(n);
  for (int i = 0; i < n; ++i) {
    GaussianRational pairing = herm_inner(form, act(rep.gen[i], s), s);
    if (!pairing.is_real())
      fail("dirac_current: <e_i.s, s> is not real; the Hermitian form is broken");
    p.components.push_back(Rational(-rep.sig.metric(i)) * pairing.re);
  }
  return p;
}

Rational dirac_norm(const CliffordRep& rep, const DiracCurrent& p) {
  return metric_pair(rep.sig, p.components, p.components);
}

namespace {

// stack of real and imaginary parts of the columns gen_j s, the real-linear
// system behind both t_space and the induced structure
Matrix real_action_matrix(const CliffordRep& rep, const Vec& s) {
  int n = rep.sig.n();
  Matrix m(2 * rep.dim, n);
  for (int j = 0; j < n; ++j) {
    Vec col = act(rep.gen[j], s);
    for (int a = 0; a < rep.dim; ++a) {
      m.at(2 * a, j) = GaussianRational(col[a].re);
      m.at(2 * a + 1, j) = GaussianRational(col[a].im);
    }
  }
  return m;
}

}  // namespace

Subspace t_space(const CliffordRep& rep, const Vec& s) {
  if (static_cast<int>(s.size()) != rep.dim) bad_arg("t_space: spinor dimension mismatch");
  return kernel(real_action_matrix(rep, s));
}

InducedStructure induced_complex_structure(const CliffordRep& rep, const Vec& s) {
  if (static_cast<int>(s.size()) != rep.dim)
    bad_arg("induced_complex_structure: spinor dimension mismatch");
  InducedStructure out;
  int n = rep.sig.n();
  Matrix lhs = real_action_matrix(rep, s);
  if (!kernel(lhs).is_zero()) {
    out.status = InducedStructure::Status::t_nonzero;
    return out;
  }
  Matrix result(n, n);
  for (int j = 0; j < n; ++j) {
    // X.s = i I(X).s  =>  solve vector_action(Y) s = -i e_j . s for Y = I(e_j)
    Vec target = act(rep.gen[j], s);
    Vec b(2 * rep.dim);
    for (int a = 0; a < rep.dim; ++a) {
      GaussianRational v = GaussianRational::i(-1) * target[a];
      b[2 * a] = GaussianRational(v.re);
      b[2 * a + 1] = GaussianRational(v.im);
    }
    auto sol = solve_linear(lhs, b);
    if (!sol) {
      out.status = InducedStructure::Status::e_not_full;
      return out;
    }
    for (int i = 0; i < n; ++i) result.at(i, j) = (*sol)[i];
  }
  Matrix square = result * result;
  if (!(square == GaussianRational(-1) * Matrix::identity(n)))
    fail("induced_complex_structure: solution does not square to -Id (internal error)");
  out.complex_structure = std::move(result);
  return out;
}

KahlerSpectrum kahler_spectrum(const CliffordRep& rep, const Matrix& j) {
  Signature sig = rep.sig;
  if (sig.r % 2 != 0 || sig.s % 2 != 0) bad_arg("kahler_spectrum: needs r, s even");
  int n = sig.n();
  if (j.rows != n || j.cols != n) bad_arg("kahler_spectrum: J dimension mismatch");
  if (!(j * j == GaussianRational(-1) * Matrix::identity(n)))
    bad_arg("kahler_spectrum: J^2 != -Id");
  // g-skewness is exactly the condition that J comes from a bivector
  SoElement je = so_from_matrix(sig, j);

  KahlerSpectrum out;
  out.m = n / 2;
  out.omega_action = two_form_action(rep, je.biv);
  RootResult roots = gaussian_roots(char_poly(out.omega_action));
  out.residual = roots.residual;
  for (std::size_t k = 0; k < roots.roots.size();) {
    std::size_t l = k;
    while (l < roots.roots.size() && roots.roots[l] == roots.roots[k]) ++l;
    out.spectrum.push_back({roots.roots[k], static_cast<int>(l - k)});
    k = l;
  }
  return out;
}

NeutralAction neutral_action(const CliffordRep& rep, const WittFrame& witt, const Matrix& b) {
  if (witt.kind != WittFrame::Kind::neutral) bad_arg("neutral_action: needs a neutral Witt frame");
  if (!(witt.sig == rep.sig)) bad_arg("neutral_action: frame/rep signature mismatch");
  int n = rep.sig.r;
  if (b.rows != n || b.cols != n) bad_arg("neutral_action: B must be n x n");
  if (!b.is_real()) bad_arg("neutral_action: B must be real");

  auto act = [&](const QVec& x) { return vector_action(rep, x); };
  auto scale_add = [](QVec x, const Rational& c, const QVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
    return x;
  };

  // A e_k = sum_i B_ik e_i,  A e*_k = -sum_i B_ki e*_i
  std::vector<QVec> ae(n, QVec(rep.sig.n(), Rational(0)));
  std::vector<QVec> aes(n, QVec(rep.sig.n(), Rational(0)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      ae[k] = scale_add(std::move(ae[k]), b.at(i, k).re, witt.e[i]);
      aes[k] = scale_add(std::move(aes[k]), -b.at(k, i).re, witt.e_star[i]);
    }

  NeutralAction out;
  Matrix sum(rep.dim, rep.dim);
  for (int i = 0; i < n; ++i) sum += act(witt.e_star[i]) * act(ae[i]) - act(aes[i]) * act(witt.e[i]);
  out.formula = GaussianRational(rat(1, 4)) * sum;
  GaussianRational half_n(rat(n, 2));
  for (int i = 0; i < rep.dim; ++i) out.formula.at(i, i) += half_n;

  // the same A as a bivector: -sum B_ik e_i ^ e*_k
  Bivector biv(rep.sig.n());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (b.at(i, k).is_zero()) continue;
      biv += (-b.at(i, k).re) * wedge(witt.e[i], witt.e_star[k]);
    }
  out.direct_paper = lambda_star(rep, biv, Normalization::paper);
  out.direct_half = lambda_star(rep, biv, Normalization::half);

  // exact affine fit formula = alpha * direct + beta * Id (free variables
  // resolve to zero, so the answer is deterministic even when direct ~ Id)
  auto fit = [&](const Matrix& direct) -> std::optional<std::pair<GaussianRational, GaussianRational>> {
    Matrix sys(rep.dim * rep.dim, 2);
    Vec rhs(rep.dim * rep.dim);
    Matrix id = Matrix::identity(rep.dim);
    for (int i = 0; i < rep.dim * rep.dim; ++i) {
      sys.at(i, 0) = direct.a[i];
      sys.at(i, 1) = id.a[i];
      rhs[i] = out.formula.a[i];
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    return std::make_pair((*sol)[0], (*sol)[1]);
  };
  out.affine_half = fit(out.direct_half);
  out.affine_paper = fit(out.direct_paper);
  return out;
}

}  // namespace spinline

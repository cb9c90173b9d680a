// Acceptance suite: one criterion per function, each printing a single
// pass/fail line. Run with no arguments for the full battery or with an index
// (1..13) for a single criterion (the ctest registration does the latter).
//
// Everything here recomputes its facts directly against the library; the only
// external ingredient is the CLI binary (criterion 13), located through the
// SPINLINE_CLI environment variable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinline/algebra_spec.hpp"
#include "spinline/invariant.hpp"
#include "spinline/serialize.hpp"
#include "spinline/spin_geometry.hpp"
#include "spinline/verify.hpp"

using namespace spinline;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

std::vector<Matrix> images(const CliffordRep& rep, const LieAlgebraRep& g, Normalization norm) {
  return lambda_images(rep, g, norm);
}

struct SimCase {
  std::string label;
  LieAlgebraRep algebra;
  LieAlgebraRep h;
};

// h in {u(2), su(2)} on n = 4, every type whose parameters exist: types 1-3
// for u(2) (nontrivial center), types 1-2 for su(2) (perfect, so no phi), no
// type 4 at n = 4 since u(2) does not fit inside so(m) with m < 4.
std::vector<SimCase> criterion5_cases() {
  std::vector<SimCase> cases;
  LieAlgebraRep u2 = unitary_family(UnitaryKind::u, 0, 2);
  LieAlgebraRep su2 = unitary_family(UnitaryKind::su, 0, 2);
  for (int type : {1, 2, 3}) {
    SimParams p;
    p.type = type;
    p.h = u2;
    p.n = 4;
    if (type == 3) p.phi = canonical_phi(u2);
    cases.push_back({"type" + std::to_string(type) + "/u(2)", sim_algebra(p), u2});
  }
  for (int type : {1, 2}) {
    SimParams p;
    p.type = type;
    p.h = su2;
    p.n = 4;
    cases.push_back({"type" + std::to_string(type) + "/su(2)", sim_algebra(p), su2});
  }
  return cases;
}

// ---- criterion 1: Clifford relations, all signatures n <= 9 ----

Outcome criterion_1() {
  Outcome out;
  int checked = 0;
  for (int n = 1; n <= 9; ++n)
    for (int r = 0; r <= n; ++r) {
      CliffordRep rep = build_rep({r, n - r});
      try {
        verify_clifford_relations(rep);
      } catch (const std::exception& e) {
        out.require(false, e.what());
        return out;
      }
      for (const auto& g : rep.gen)
        out.require(rref(g).rank == rep.dim,
                    "non-invertible generator at (" + std::to_string(r) + "," +
                        std::to_string(n - r) + ")");
      ++checked;
    }
  out.note = std::to_string(checked) + " signatures, relations exact, all generators invertible";
  return out;
}

// ---- criterion 2: half scale is a homomorphism, unhalved misses by 2 ----

Outcome criterion_2() {
  Outcome out;
  long pairs = 0;
  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      Signature sig{r, n - r};
      CliffordRep rep = build_rep(sig);
      LieAlgebraRep so = so_basis(sig);
      for (int i = 0; i < so.dim(); ++i)
        for (int j = i + 1; j < so.dim(); ++j) {
          Matrix lhs = bracket(lambda_star(rep, so.gen[i], Normalization::half),
                               lambda_star(rep, so.gen[j], Normalization::half));
          Matrix rhs = lambda_star(rep, so_bracket(so.gen[i], so.gen[j]), Normalization::half);
          out.require(lhs == rhs, "half-scale bracket identity fails at n=" + std::to_string(n));
          if (!out.pass) return out;
          ++pairs;
        }
    }
  // witnessed factor-2 failure of the unhalved scale in so(3)
  Signature wsig{0, 3};
  CliffordRep wrep = build_rep(wsig);
  LieAlgebraRep wso = so_basis(wsig);
  Matrix lhs = bracket(lambda_star(wrep, wso.gen[0], Normalization::paper),
                       lambda_star(wrep, wso.gen[1], Normalization::paper));
  Matrix rhs = lambda_star(wrep, so_bracket(wso.gen[0], wso.gen[1]), Normalization::paper);
  out.require(!rhs.is_zero() && !(lhs == rhs) && lhs == GaussianRational(2) * rhs,
              "unhalved scale does not miss by exactly 2 on the witness pair");
  std::ostringstream os;
  os << pairs << " basis pairs exact at half scale; witnessed unhalved pair off by exactly 2";
  if (out.pass) out.note = os.str();
  return out;
}

// ---- criterion 3: u(m) exactly two lines, su(m) one annihilated family ----

Outcome criterion_3() {
  Outcome out;
  for (int m : {2, 3, 4}) {
    CliffordRep rep = build_rep({0, 2 * m});
    LineReport ru =
        invariant_lines(images(rep, unitary_family(UnitaryKind::u, 0, m), Normalization::half),
                        rep.dim);
    LineCount cu = line_count(ru);
    out.require(cu.isolated == 2 && cu.families == 0, "u(" + std::to_string(m) + ") line count");
    for (const auto& comp : ru.components)
      out.require(!comp.annihilated, "u(" + std::to_string(m) + ") line is annihilated");

    LineReport rs =
        invariant_lines(images(rep, unitary_family(UnitaryKind::su, 0, m), Normalization::half),
                        rep.dim);
    LineCount cs = line_count(rs);
    out.require(cs.isolated == 0 && cs.families == 1 && rs.components.size() == 1 &&
                    rs.components[0].annihilated && rs.components[0].subspace.dim() == 2,
                "su(" + std::to_string(m) + ") family shape");
  }
  if (out.pass) out.note = "m in {2,3,4}: u(m) -> 2 isolated non-annihilated; su(m) -> one annihilated 2-dim family";
  return out;
}

// ---- criterion 4: exceptional stabilizers and sp(1) ----

Outcome criterion_4() {
  Outcome out;
  LieAlgebraRep g2 = form_stabilizer({0, 7}, g2_form());
  out.require(g2.dim() == 14, "g2 stabilizer dimension");
  CliffordRep rep7 = build_rep({0, 7});
  LineReport r7 = invariant_lines(images(rep7, g2, Normalization::half), rep7.dim);
  out.require(r7.components.size() == 1 && r7.components[0].annihilated &&
                  r7.components[0].isolated,
              "g2 line shape in Delta_7");

  LieAlgebraRep spin7 = form_stabilizer({0, 8}, cayley_form());
  out.require(spin7.dim() == 21, "cayley stabilizer dimension");
  CliffordRep rep8 = build_rep({0, 8});
  LineReport r8 = invariant_lines(images(rep8, spin7, Normalization::half), rep8.dim);
  std::string half = "neither";
  out.require(r8.components.size() == 1 && r8.components[0].annihilated &&
                  r8.components[0].isolated,
              "cayley-stabilizer line shape in Delta_8");
  if (out.pass) {
    auto [plus, minus] = half_spinor_split(rep8);
    if (plus.contains(r8.components[0].subspace)) half = "plus";
    if (minus.contains(r8.components[0].subspace)) half = "minus";
    out.require(half != "neither", "line not contained in a half-spinor module");
  }

  CliffordRep rep4 = build_rep({0, 4});
  LieAlgebraRep sp1 = unitary_family(UnitaryKind::sp, 0, 1);
  Subspace k = joint_kernel(images(rep4, sp1, Normalization::half), rep4.dim);
  out.require(k.dim() >= 2, "sp(1) annihilated dimension");
  if (out.pass)
    out.note = "dims 14/21; single annihilated isolated lines (cayley line in the " + half +
               " half); sp(1) kernel dim " + std::to_string(k.dim());
  return out;
}

// ---- criterion 5: parabolic lines live in Delta_4 (x) u(1) with h's counts ----

Outcome criterion_5() {
  Outcome out;
  Signature amb{1, 5};
  CliffordRep rep = build_rep(amb);
  CliffordRep small = build_rep({0, 4});
  WittFrame w = witt_frame(amb, WittFrame::Kind::lorentz);
  LorentzSplit ls = lorentz_split(rep);

  for (const auto& c : criterion5_cases()) {
    LineReport big = invariant_lines(images(rep, c.algebra, Normalization::half), rep.dim);
    LineReport hr = invariant_lines(images(small, c.h, Normalization::half), small.dim);
    for (const auto& comp : big.components)
      out.require(intersect(comp.subspace, ls.plus) == comp.subspace,
                  c.label + ": component escapes Delta_4 (x) u(1)");
    LineCount cb = line_count(big), ch = line_count(hr);
    out.require(cb.isolated == ch.isolated && cb.families == ch.families,
                c.label + ": counts differ from h on Delta_4");
  }

  // e_i ^ p annihilates the plus half, p ^ q acts by opposite nonzero scalars
  for (int i = 2; i < amb.n(); ++i) {
    QVec ei(amb.n(), Rational(0));
    ei[i] = 1;
    out.require(image(two_form_action(rep, wedge(ei, w.p)), ls.plus).is_zero(),
                "e_i ^ p does not annihilate the plus half");
  }
  Matrix pq = two_form_action(rep, wedge(w.p, w.q));
  auto scalar = [&](const Subspace& s) -> GaussianRational {
    Vec v = s.basis.row(0);
    Vec mv = act(pq, v);
    return mv[s.pivots()[0]];
  };
  GaussianRational cp = scalar(ls.plus), cm = scalar(ls.minus);
  Matrix check_plus = pq;
  for (int i = 0; i < rep.dim; ++i) check_plus.at(i, i) -= cp;
  out.require(image(check_plus, ls.plus).is_zero(), "p^q not scalar on the plus half");
  Matrix check_minus = pq;
  for (int i = 0; i < rep.dim; ++i) check_minus.at(i, i) -= cm;
  out.require(image(check_minus, ls.minus).is_zero(), "p^q not scalar on the minus half");
  out.require(!cp.is_zero() && cm == -cp, "p^q scalars not opposite/nonzero");
  if (out.pass)
    out.note = "5 constructible cases match; p^q scalar on u(1)-half: " + scalar_string(cp) +
               " (unhalved; half scale " + scalar_string(cp * GaussianRational(rat(1, 2))) +
               "), opposite on the other half";
  return out;
}

// ---- criterion 6: annihilation appears exactly for type 2 ----

Outcome criterion_6() {
  Outcome out;
  Signature amb{1, 5};
  CliffordRep rep = build_rep(amb);
  auto annihilated = [&](const LieAlgebraRep& g) {
    LineReport r = invariant_lines(images(rep, g, Normalization::half), rep.dim);
    int count = 0;
    for (const auto& comp : r.components)
      if (comp.annihilated) ++count;
    return count;
  };

  LieAlgebraRep su2 = unitary_family(UnitaryKind::su, 0, 2);
  SimParams p2{};
  p2.type = 2;
  p2.h = su2;
  p2.n = 4;
  out.require(annihilated(sim_algebra(p2)) > 0, "type 2 over su(2) has no annihilated component");
  SimParams p1{};
  p1.type = 1;
  p1.h = su2;
  p1.n = 4;
  out.require(annihilated(sim_algebra(p1)) == 0, "type 1 over su(2) has an annihilated component");

  // su(2) is perfect, so type 3 over it admits no phi; the centered h =
  // span{e0^e1 + e2^e3} (which annihilates a 2-space of Delta_4) carries the
  // same contrast: type 2 keeps an annihilated family, the phi-weight of
  // type 3 removes it.
  LieAlgebraRep hc;
  hc.name = "u1-diag";
  hc.sig = {0, 4};
  Bivector b(4);
  b.at(0, 1) = 1;
  b.at(2, 3) = 1;
  hc.gen.push_back(so_from_bivector({0, 4}, b));
  SimParams c2{};
  c2.type = 2;
  c2.h = hc;
  c2.n = 4;
  out.require(annihilated(sim_algebra(c2)) > 0, "type 2 over the centered h lost its family");
  SimParams c3{};
  c3.type = 3;
  c3.h = hc;
  c3.n = 4;
  c3.phi = {rat(1)};
  out.require(annihilated(sim_algebra(c3)) == 0, "type 3 phi-weight failed to kill annihilation");
  SimParams c1{};
  c1.type = 1;
  c1.h = hc;
  c1.n = 4;
  out.require(annihilated(sim_algebra(c1)) == 0, "type 1 over the centered h kept annihilation");

  if (out.pass)
    out.note = "type 2 annihilates (su(2) and centered h); types 1 and 3 never do (type 3 "
               "checked over the centered h; su(2) is perfect so no phi exists there)";
  return out;
}

// ---- criterion 7: Dirac currents ----

Outcome criterion_7() {
  Outcome out;
  Signature amb{1, 5};
  CliffordRep rep = build_rep(amb);
  HermitianForm form = hermitian_form(rep);
  WittFrame w = witt_frame(amb, WittFrame::Kind::lorentz);
  int lines = 0;
  for (const auto& c : criterion5_cases()) {
    LineReport r = invariant_lines(images(rep, c.algebra, Normalization::half), rep.dim);
    for (const auto& comp : r.components) {
      if (!comp.isolated) continue;
      Vec s = comp.subspace.basis.row(0);
      DiracCurrent pd = dirac_current(rep, form, s);
      out.require(sgn(dirac_norm(rep, pd)) == 0, c.label + ": current not isotropic");
      Rational lambda = pd.components[0];
      out.require(sgn(lambda) != 0, c.label + ": current vanishes on a line spinor");
      for (std::size_t i = 0; i < pd.components.size(); ++i)
        out.require(pd.components[i] == lambda * w.p[i], c.label + ": current not proportional to p");
      ++lines;
    }
  }

  int random_checked = 0;
  for (Signature sig : {Signature{1, 3}, Signature{1, 5}}) {
    CliffordRep r = build_rep(sig);
    HermitianForm f = hermitian_form(r);
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
      Vec s = random_spinor(rng, r.dim);
      DiracCurrent pd = dirac_current(r, f, s);
      out.require(sgn(dirac_norm(r, pd)) <= 0, "random spinor with spacelike current");
      bool s_zero = is_zero_vec(s);
      bool p_zero = true;
      for (const auto& comp : pd.components) p_zero = p_zero && sgn(comp) == 0;
      out.require(p_zero == s_zero, "current zero iff spinor zero violated");
      ++random_checked;
    }
    DiracCurrent pd0 = dirac_current(r, f, Vec(r.dim));
    for (const auto& comp : pd0.components)
      out.require(sgn(comp) == 0, "current of the zero spinor is nonzero");
  }
  if (out.pass)
    out.note = std::to_string(lines) + " isolated line spinors proportional to p and isotropic; " +
               std::to_string(random_checked) + " random spinors causal with zero only at s = 0";
  return out;
}

// ---- criterion 8: Kahler spectrum, extreme lines, induced structures ----

Outcome criterion_8() {
  Outcome out;
  for (int m : {1, 2, 3, 4}) {
    Signature sig{0, 2 * m};
    CliffordRep rep = build_rep(sig);
    KahlerSpectrum ks = kahler_spectrum(rep, standard_complex_structure(sig));
    long binom = 1;
    std::vector<std::pair<GaussianRational, int>> expected;
    for (int k = 0; k <= m; ++k) {
      expected.push_back({GaussianRational::i(m - 2 * k), static_cast<int>(binom)});
      binom = binom * (m - k) / (k + 1);
    }
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
    out.require(ks.spectrum == expected && ks.residual == Poly::one(),
                "spectrum mismatch at m = " + std::to_string(m));

    LieAlgebraRep u = unitary_family(UnitaryKind::u, 0, m);
    LineReport lines = invariant_lines(images(rep, u, Normalization::half), rep.dim);
    out.require(lines.components.size() == 2, "u(m) line count at m = " + std::to_string(m));
    Matrix top = ks.omega_action, bottom = ks.omega_action;
    for (int i = 0; i < rep.dim; ++i) {
      top.at(i, i) -= GaussianRational::i(m);
      bottom.at(i, i) += GaussianRational::i(m);
    }
    Subspace s_top = kernel(top), s_bottom = kernel(bottom);
    out.require(s_top.dim() == 1 && s_bottom.dim() == 1,
                "extreme eigenspaces not one-dimensional at m = " + std::to_string(m));
    if (out.pass && lines.components.size() == 2) {
      const Subspace& l0 = lines.components[0].subspace;
      const Subspace& l1 = lines.components[1].subspace;
      out.require((l0 == s_top && l1 == s_bottom) || (l0 == s_bottom && l1 == s_top),
                  "u(m) lines are not the extreme eigenspaces at m = " + std::to_string(m));
    }
    if (m >= 2 && out.pass) {
      InducedStructure a = induced_complex_structure(rep, lines.components[0].subspace.basis.row(0));
      InducedStructure b = induced_complex_structure(rep, lines.components[1].subspace.basis.row(0));
      out.require(a.status == InducedStructure::Status::ok &&
                      b.status == InducedStructure::Status::ok,
                  "induced structure failed at m = " + std::to_string(m));
      if (out.pass)
        out.require(a.complex_structure == GaussianRational(-1) * b.complex_structure,
                    "induced structures are not exact negatives at m = " + std::to_string(m));
    }
  }
  if (out.pass)
    out.note = "m in {1..4}: spectrum (m-2k)i with binomial multiplicities; extreme eigenspaces "
               "1-dim and equal to the u(m) lines; induced structures I and -I";
  return out;
}

// ---- criterion 9: the induced-structure machinery ----

Outcome criterion_9() {
  Outcome out;
  for (int m : {2, 3}) {
    Signature sig{0, 2 * m};
    CliffordRep rep = build_rep(sig);
    LieAlgebraRep u = unitary_family(UnitaryKind::u, 0, m);
    LineReport lines = invariant_lines(images(rep, u, Normalization::half), rep.dim);
    Matrix g(sig.n(), sig.n());
    for (int d = 0; d < sig.n(); ++d) g.at(d, d) = GaussianRational(sig.metric(d));
    for (const auto& comp : lines.components) {
      InducedStructure is = induced_complex_structure(rep, comp.subspace.basis.row(0));
      out.require(is.status == InducedStructure::Status::ok, "induced structure not solvable");
      if (!out.pass) return out;
      const Matrix& i_mat = is.complex_structure;
      out.require(i_mat * i_mat == GaussianRational(-1) * Matrix::identity(sig.n()),
                  "I^2 != -Id");
      out.require(i_mat.transpose() * g * i_mat == g, "I is not g-orthogonal");
    }
  }
  SplitMix64 rng(515);
  for (Signature sig : {Signature{0, 4}, Signature{0, 6}}) {
    CliffordRep rep = build_rep(sig);
    for (int trial = 0; trial < 25; ++trial) {
      Vec s = random_spinor(rng, rep.dim);
      if (is_zero_vec(s)) continue;
      out.require(t_space(rep, s).is_zero(), "nonzero definite-signature spinor with T != 0");
    }
  }
  if (out.pass)
    out.note = "u(m)-line spinors solve X.s = i I(X).s with I^2 = -Id, g-orthogonal; definite "
               "random spinors have T = 0";
  return out;
}

// ---- criterion 10: neutral signature ----

Outcome criterion_10() {
  Outcome out;
  for (int n : {2, 3}) {
    Signature sig{n, n};
    CliffordRep rep = build_rep(sig);
    WittFrame w = witt_frame(sig, WittFrame::Kind::neutral);
    LieAlgebraRep sl = neutral_algebra(NeutralKind::sl, n);
    LieAlgebraRep gl = neutral_algebra(NeutralKind::gl, n);

    Subspace ker = joint_kernel(images(rep, sl, Normalization::half), rep.dim);
    out.require(!ker.is_zero(), "sl joint kernel is zero at n = " + std::to_string(n));

    LineReport lines = invariant_lines(images(rep, gl, Normalization::half), rep.dim);
    out.require(!lines.components.empty(), "gl preserves no lines at n = " + std::to_string(n));
    NeutralAction na_e = neutral_action(rep, w, Matrix::identity(n));
    bool n_attained = false;
    for (const auto& comp : lines.components) {
      out.require(ker.contains(comp.subspace), "gl line outside the sl kernel");
      out.require(!comp.annihilated, "gl annihilates a line it should only preserve");
      Vec v = comp.subspace.basis.row(0);
      Vec mv = act(na_e.direct_paper, v);
      GaussianRational c = mv[comp.subspace.pivots()[0]];
      for (std::size_t k = 0; k < v.size(); ++k)
        out.require(mv[k] == c * v[k], "diag(E,-E) not scalar on a gl line");
      out.require(c == GaussianRational(n) || c == GaussianRational(-n),
                  "diag(E,-E) character is " + scalar_string(c) + ", not +-n");
      if (c == GaussianRational(n)) n_attained = true;
    }
    // the unhalved scale must realize the scalar n on a preserved line; a
    // different measured value fails loudly here, with no renormalization
    out.require(n_attained,
                "diag(E,-E) does not act as the scalar n on any preserved line at n = " +
                    std::to_string(n));

    // affine match formula = alpha * direct + beta * Id with B-independent
    // (alpha, beta), sampled over random integer B
    SplitMix64 rng(77 + n);
    std::optional<std::pair<GaussianRational, GaussianRational>> first;
    for (int trial = 0; trial < 10; ++trial) {
      Matrix b(n, n);
      for (auto& v : b.a) v = GaussianRational(rng.range(-4, 4));
      NeutralAction na = neutral_action(rep, w, b);
      out.require(na.affine_half.has_value(), "no affine fit for a sampled B");
      if (!na.affine_half) break;
      if (!first)
        first = na.affine_half;
      else
        out.require(first->first == na.affine_half->first &&
                        first->second == na.affine_half->second,
                    "affine fit depends on B: alpha = " + scalar_string(na.affine_half->first) +
                        ", beta = " + scalar_string(na.affine_half->second) + " vs beta = " +
                        scalar_string(first->second) +
                        " (measured law: beta = (n - tr B)/2, so beta varies with the trace)");
    }
  }
  if (out.pass)
    out.note = "sl kernels nonzero; gl lines preserved with nonzero character, scalar n attained; "
               "affine fit B-independent";
  return out;
}

// ---- criterion 11: the twisted-kernel criterion ----

Outcome criterion_11() {
  Outcome out;
  CliffordRep rep = build_rep({0, 4});
  LieAlgebraRep u2 = unitary_family(UnitaryKind::u, 0, 2);
  std::vector<Matrix> gens = images(rep, u2, Normalization::half);
  LineReport lines = invariant_lines(gens, rep.dim);
  out.require(lines.components.size() == 2, "u(2) line count");
  if (!out.pass) return out;

  const InvariantComponent& line = lines.components[0];
  std::vector<std::pair<Matrix, GaussianRational>> pairs;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    out.require(sgn(line.character[j].re) == 0, "character is not purely imaginary");
    pairs.push_back({gens[j], GaussianRational(line.character[j].im)});
  }
  auto [ok, space] = spinc_exists(pairs, rep.dim);
  out.require(ok, "matching charges rejected");
  out.require(space == line.subspace, "certified subspace is not the invariant line");

  int tried = 0;
  for (const Rational& d : {rat(1), rat(-1), rat(1, 2), rat(-3), rat(7, 3)})
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto perturbed = pairs;
      perturbed[j].second += GaussianRational(d);
      auto [still, sub] = spinc_exists(perturbed, rep.dim);
      out.require(!still, "perturbed charge still accepted");
      ++tried;
    }
  if (out.pass)
    out.note = "charges from the line character certify exactly that line; " +
               std::to_string(tried) + " single-charge perturbations all rejected";
  return out;
}

// ---- criterion 12: brute-force oracle agreement on dim Delta <= 4 ----

// Independent oracle: enumerate the Q(i) eigenspaces of each generator via
// char_poly + root search + kernels, then intersect one eigenspace per
// generator over all eigenvalue tuples (depth-first, pruning empties). A
// nonzero leaf is a joint eigenspace with its character tuple.
std::vector<std::pair<Subspace, Vec>> oracle(const std::vector<Matrix>& gens, int dim) {
  std::vector<std::vector<std::pair<GaussianRational, Subspace>>> eigen(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    RootResult roots = gaussian_roots(char_poly(gens[j]));
    std::vector<GaussianRational> distinct = roots.roots;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& lam : distinct) {
      Matrix shifted = gens[j];
      for (int i = 0; i < dim; ++i) shifted.at(i, i) -= lam;
      eigen[j].push_back({lam, kernel(shifted)});
    }
  }
  std::vector<std::pair<Subspace, Vec>> found;
  std::function<void(std::size_t, Subspace, Vec)> dfs = [&](std::size_t j, Subspace cur, Vec chi) {
    if (cur.is_zero()) return;
    if (j == gens.size()) {
      found.push_back({std::move(cur), std::move(chi)});
      return;
    }
    for (const auto& [lam, space] : eigen[j]) {
      Vec next = chi;
      next.push_back(lam);
      dfs(j + 1, intersect(cur, space), std::move(next));
    }
  };
  dfs(0, Subspace::full(dim), {});
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return subspace_less(a.first, b.first); });
  return found;
}

Outcome criterion_12() {
  Outcome out;
  std::vector<std::string> catalog = {
      "so:0,1", "so:0,2", "so:1,1", "so:0,3", "so:1,2", "so:2,1", "so:0,4", "so:1,3",
      "so:2,2", "so:0,5", "so:1,4", "u:0,1",  "u:0,2",  "u:1,1",  "su:0,2", "su:1,1",
      "sp:0,1", "neutral-gl:1", "neutral-sl:1", "neutral-gl:2", "neutral-sl:2",
      "sim:type=1,h=0,n=1", "sim:type=2,h=0,n=1", "sim:type=1,h=u:0,1,n=2",
      "sim:type=2,h=u:0,1,n=2", "sim:type=3,h=u:0,1,n=2", "sim:type=4,h=u:0,1,n=3,m=2"};
  int agreements = 0;
  for (const auto& spec : catalog) {
    LieAlgebraRep g = parse_algebra_spec(spec);
    CliffordRep rep = build_rep(g.sig);
    if (rep.dim > 4) {
      out.require(false, spec + ": catalog entry exceeds dim 4");
      continue;
    }
    for (Normalization norm : {Normalization::half, Normalization::paper}) {
      std::vector<Matrix> gens = images(rep, g, norm);
      LineReport r = invariant_lines(gens, rep.dim);
      auto expected = oracle(gens, rep.dim);
      bool match = expected.size() == r.components.size();
      if (match)
        for (std::size_t k = 0; k < expected.size(); ++k)
          match = match && expected[k].first == r.components[k].subspace &&
                  expected[k].second == r.components[k].character;
      out.require(match, spec + ": oracle disagreement");
      ++agreements;
    }
  }
  if (out.pass)
    out.note = std::to_string(agreements) + " (algebra, normalization) runs agree with the "
               "brute-force joint-eigenspace oracle";
  return out;
}

// ---- criterion 13: byte-identical reports through the CLI ----

Outcome criterion_13() {
  Outcome out;
  const char* cli = std::getenv("SPINLINE_CLI");
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  if (cli != nullptr) {
    std::string base = "spinline_acceptance_report_";
    std::string cmd1 = std::string(cli) + " verify --suite all --seed 0 --format json > " + base +
                       "1.json 2>/dev/null";
    std::string cmd2 = std::string(cli) + " verify --suite all --seed 0 --format json > " + base +
                       "2.json 2>/dev/null";
    // `verify --suite all` exits 1 while the documented red claim stands, so
    // the exit codes are irrelevant here; only the bytes are compared
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    out.require(rc1 != -1 && rc2 != -1, "could not spawn the CLI");
    std::string a = slurp(base + "1.json"), b = slurp(base + "2.json");
    std::remove((base + "1.json").c_str());
    std::remove((base + "2.json").c_str());
    out.require(!a.empty(), "CLI produced no output");
    out.require(a == b, "reports differ between runs");
    if (out.pass)
      out.note = "two `verify --suite all --seed 0 --format json` runs byte-identical (" +
                 std::to_string(a.size()) + " bytes)";
  } else {
    SuiteSpec spec;
    spec.name = "all";
    std::string a = report_json(run_suite(spec));
    std::string b = report_json(run_suite(spec));
    out.require(a == b, "in-process reports differ");
    if (out.pass) out.note = "SPINLINE_CLI unset; in-process double run byte-identical";
  }
  return out;
}

struct Criterion {
  int index;
  const char* label;
  Outcome (*fn)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Clifford relations, all signatures n <= 9", criterion_1},
      {2, "bivector-action scale: homomorphism at 1/2, factor 2 otherwise", criterion_2},
      {3, "u(m): two lines; su(m): one annihilated family", criterion_3},
      {4, "exceptional stabilizers and sp(1)", criterion_4},
      {5, "parabolic lines live in Delta_4 (x) u(1) with matching counts", criterion_5},
      {6, "annihilation iff type 2", criterion_6},
      {7, "Dirac currents: isotropic on lines, causal on random spinors", criterion_7},
      {8, "Kahler spectrum, extreme lines, induced structures", criterion_8},
      {9, "induced-structure machinery", criterion_9},
      {10, "neutral signature", criterion_10},
      {11, "twisted charges certify exactly the invariant lines", criterion_11},
      {12, "brute-force oracle agreement on dim Delta <= 4", criterion_12},
      {13, "byte-identical verification reports", criterion_13},
  };
  return all;
}

int run_one(const Criterion& c) {
  Outcome out;
  try {
    out = c.fn();
  } catch (const std::exception& e) {
    out.pass = false;
    out.note = std::string("exception: ") + e.what();
  }
  std::printf("criterion %02d [%s]: %s%s%s\n", c.index, c.label, out.pass ? "PASS" : "FAIL",
              out.note.empty() ? "" : " - ", out.note.c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    int wanted = std::atoi(argv[1]);
    for (const auto& c : criteria())
      if (c.index == wanted) return run_one(c);
    std::fprintf(stderr, "unknown criterion %s (expected 1..13)\n", argv[1]);
    return 2;
  }
  int failures = 0;
  for (const auto& c : criteria()) failures += run_one(c);
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "spinline/invariant.hpp"

#include <algorithm>

namespace spinline {

Subspace joint_kernel(const std::vector<Matrix>& mats, int ambient) {
  if (mats.empty()) return Subspace::full(ambient);
  int rows = 0;
  for (const auto& m : mats) {
    if (m.cols != ambient) bad_arg("joint_kernel: ambient mismatch");
    rows += m.rows;
  }
  Matrix stacked(rows, ambient);
  int at = 0;
  for (const auto& m : mats) {
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < ambient; ++j) stacked.at(at + i, j) = m.at(i, j);
    at += m.rows;
  }
  return kernel(stacked);
}

namespace {

// matrix of the action of `a` on `s` in the RREF basis coordinates of `s`;
// requires s to be a-invariant
Matrix restrict_to(const Matrix& a, const Subspace& s) {
  std::vector<int> piv = s.pivots();
  Matrix r(s.dim(), s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    Vec img = act(a, s.basis.row(j));
    auto coords = s.coordinates(img);
    if (!coords) fail("invariant_lines: subspace escaped under a generator (internal error)");
    for (int i = 0; i < s.dim(); ++i) r.at(i, j) = (*coords)[i];
  }
  return r;
}

// rows of `coords` (in the basis of s) pulled back to ambient vectors
Subspace pull_back(const Subspace& coords, const Subspace& s) {
  std::vector<Vec> rows;
  for (int t = 0; t < coords.dim(); ++t) {
    Vec w(s.ambient);
    for (int i = 0; i < s.dim(); ++i) {
      const GaussianRational& c = coords.basis.at(t, i);
      if (c.is_zero()) continue;
      for (int k = 0; k < s.ambient; ++k) w[k] += c * s.basis.at(i, k);
    }
    rows.push_back(std::move(w));
  }
  return Subspace::row_span(Matrix::from_rows(rows));
}

struct Splitter {
  const std::vector<Matrix>& gens;
  LineReport& report;

  void split(const Subspace& space, std::size_t t, Vec character) {
    if (space.dim() == 0) return;
    if (t == gens.size()) {
      InvariantComponent comp;
      comp.subspace = space;
      comp.annihilated = is_zero_vec(character);
      comp.character = std::move(character);
      comp.isolated = space.dim() == 1;
      report.components.push_back(std::move(comp));
      return;
    }
    Matrix r = restrict_to(gens[t], space);
    RootResult roots = gaussian_roots(char_poly(r));
    if (roots.residual.degree() >= 1) report.residual_factors.push_back(roots.residual);
    std::vector<GaussianRational> distinct = roots.roots;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& lam : distinct) {
      Matrix shifted = r;
      for (int i = 0; i < r.rows; ++i) shifted.at(i, i) -= lam;
      Subspace eig = pull_back(kernel(shifted), space);
      Vec chi = character;
      chi.push_back(lam);
      split(eig, t + 1, std::move(chi));
    }
  }
};

}  // namespace

LineReport invariant_lines(const std::vector<Matrix>& gens, int ambient) {
  for (const auto& g : gens)
    if (g.rows != ambient || g.cols != ambient)
      bad_arg("invariant_lines: generators must be square of the ambient dimension");

  LineReport report;
  if (gens.empty()) {
    InvariantComponent comp;
    comp.subspace = Subspace::full(ambient);
    comp.annihilated = true;
    comp.isolated = ambient == 1;
    report.components.push_back(std::move(comp));
  } else {
    // closure check and commutator span
    SpanBuilder span(ambient * ambient);
    for (const auto& g : gens) span.add(g.a);
    std::vector<Matrix> commutators;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Matrix c = bracket(gens[i], gens[j]);
        Vec residual;
        if (!span.contains(c.a, &residual)) {
          Matrix res(ambient, ambient);
          res.a = std::move(residual);
          throw closure_error(static_cast<int>(i), static_cast<int>(j), std::move(res));
        }
        if (!c.is_zero()) commutators.push_back(std::move(c));
      }
    Subspace k = joint_kernel(commutators, ambient);
    Splitter sp{gens, report};
    sp.split(k, 0, {});
  }

  std::sort(report.components.begin(), report.components.end(),
            [](const InvariantComponent& x, const InvariantComponent& y) {
              return subspace_less(x.subspace, y.subspace);
            });
  for (const auto& comp : report.components) {
    (comp.isolated ? report.isolated_count : report.family_count) += 1;
    // soundness: the advertised eigen relation holds exactly
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (int rrow = 0; rrow < comp.subspace.dim(); ++rrow) {
        Vec v = comp.subspace.basis.row(rrow);
        Vec lhs = act(gens[j], v);
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!(lhs[i] == comp.character[j] * v[i]))
            fail("invariant_lines: component fails its eigen relation (internal error)");
      }
  }
  return report;
}

LineCount line_count(const LineReport& report) {
  LineCount c;
  for (const auto& comp : report.components) {
    if (comp.isolated) {
      ++c.isolated;
      if (comp.annihilated) ++c.annihilated_isolated;
    } else {
      ++c.families;
    }
  }
  return c;
}

std::pair<bool, Subspace> spinc_exists(
    const std::vector<std::pair<Matrix, GaussianRational>>& pairs, int ambient) {
  std::vector<Matrix> shifted;
  shifted.reserve(pairs.size());
  for (const auto& [a, t] : pairs) {
    if (a.rows != ambient || a.cols != ambient) bad_arg("spinc_exists: ambient mismatch");
    Matrix m = a;
    GaussianRational it = GaussianRational::i() * t;
    for (int i = 0; i < ambient; ++i) m.at(i, i) -= it;
    shifted.push_back(std::move(m));
  }
  Subspace k = joint_kernel(shifted, ambient);
  return {!k.is_zero(), k};
}

}  // namespace spinline

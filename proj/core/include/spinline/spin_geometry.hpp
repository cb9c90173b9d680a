#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinline/holonomy.hpp"

namespace spinline {

// Spin-invariant Hermitian product <u, v> = (beta u)^dagger v on Delta.
// beta = Id for definite signature; beta = gen_0 (the timelike generator,
// which is Hermitian in this construction) for r = 1. Construction verifies:
// beta Hermitian, <lambda(A)u, v> + <u, lambda(A)v> = 0 for the so basis, and
// for r = 1 a fixed self-adjointness sign kappa with <X.u, v> = kappa <u, X.v>
// for every frame vector X.
struct HermitianForm {
  Signature sig;
  Matrix beta;
  int kappa = 0;  // +-1 when r = 1, 0 when the notion is vacuous (r = 0)
};

HermitianForm hermitian_form(const CliffordRep& rep);
GaussianRational herm_inner(const HermitianForm& form, const Vec& u, const Vec& v);

// The vector p with g(p, X) = -<X.s, s>: components -k_i <e_i.s, s> over the
// orthonormal frame. The pairings are provably real; a non-real value means a
// broken form and is a hard error.
struct DiracCurrent {
  std::vector<Rational> components;
};

DiracCurrent dirac_current(const CliffordRep& rep, const HermitianForm& form, const Vec& s);
Rational dirac_norm(const CliffordRep& rep, const DiracCurrent& p);  // g(p, p)

// T(s) = {X real : X.s = 0}, as a rational subspace of the frame space.
Subspace t_space(const CliffordRep& rep, const Vec& s);

// Solve X.s = i I(X).s for a real endomorphism I: success needs a solution
// for every frame vector (E = full tangent space) and uniqueness (T = 0);
// then I * I = -Id is asserted.
struct InducedStructure {
  enum class Status { ok, e_not_full, t_nonzero };
  Status status = Status::ok;
  Matrix complex_structure;  // valid when status == ok
};

InducedStructure induced_complex_structure(const CliffordRep& rep, const Vec& s);

// Clifford action of the 2-form of a compatible complex structure J, with its
// exact spectrum. The contract (checked by the suites, not assumed here) is
// eigenvalues (m - 2k)i with multiplicity binomial(m, k), m = n/2.
struct KahlerSpectrum {
  int m = 0;
  Matrix omega_action;
  std::vector<std::pair<GaussianRational, int>> spectrum;  // sorted eigenvalues
  Poly residual;                                           // non-Q(i) part, expected 1
};

KahlerSpectrum kahler_spectrum(const CliffordRep& rep, const Matrix& j);

// The displayed neutral-signature operator
//   (n/2) Id + (1/4) sum_i ( e*_i . A(e_i) - A(e*_i) . e_i )
// for A = diag(B, -B^T) on the Witt frame, next to the direct images
// lambda(A) at both scales, and the exact affine fits formula = alpha *
// direct + beta * Id where they exist.
struct NeutralAction {
  Matrix formula;
  Matrix direct_half;
  Matrix direct_paper;
  std::optional<std::pair<GaussianRational, GaussianRational>> affine_half;
  std::optional<std::pair<GaussianRational, GaussianRational>> affine_paper;
};

NeutralAction neutral_action(const CliffordRep& rep, const WittFrame& witt, const Matrix& b);

}  // namespace spinline

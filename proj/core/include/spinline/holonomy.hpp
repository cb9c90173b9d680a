#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinline/clifford.hpp"

namespace spinline {

// Scale of the bivector action on spinors. `half` maps e_i ^ e_j to
// (1/2) gen_i gen_j and is the Lie algebra homomorphism; `paper` drops the
// 1/2 (the scale common in explicit spinor computations). Both have the same
// invariant subspaces.
enum class Normalization { half, paper };

inline const char* normalization_name(Normalization n) {
  return n == Normalization::half ? "half" : "paper";
}

// An element of so(r, s) carried in both coordinates: the bivector table and
// the induced n x n endomorphism under (x ^ y) z = g(x,z) y - g(y,z) x.
// The matrix is always real and g-skew.
struct SoElement {
  Signature sig;
  Bivector biv;
  Matrix mat;
};

SoElement so_from_bivector(Signature sig, Bivector b);
SoElement so_from_matrix(Signature sig, const Matrix& m);  // rejects non-g-skew input
Matrix so_matrix_of(Signature sig, const Bivector& b);
SoElement so_bracket(const SoElement& x, const SoElement& y);

struct LieAlgebraRep {
  std::string name;
  Signature sig;
  std::vector<SoElement> gen;
  std::map<std::string, std::string> metadata;

  int dim() const { return static_cast<int>(gen.size()); }
};

// the n(n-1)/2 frame bivectors e_i ^ e_j, i < j
LieAlgebraRep so_basis(Signature sig);

Matrix lambda_star(const CliffordRep& rep, const Bivector& b, Normalization norm);
Matrix lambda_star(const CliffordRep& rep, const SoElement& a, Normalization norm);
std::vector<Matrix> lambda_images(const CliffordRep& rep, const LieAlgebraRep& g,
                                  Normalization norm);

// J pairing coordinates (e_{2i}, e_{2i+1}) with J e_{2i} = e_{2i+1}; timelike
// pairs come first, so it lies in so(2p, 2q).
Matrix standard_complex_structure(Signature sig);
// anticommuting pair (J1, J2) on 4-blocks for signatures (4p, 4q)
std::pair<Matrix, Matrix> quaternionic_structures(Signature sig);

enum class UnitaryKind { u, su, sp };

// u(p, q) / su(p, q) inside so(2p, 2q) as the centralizer of J (trace-free
// against J for su); sp(p, q) inside so(4p, 4q) as the joint centralizer of
// J1, J2. Dimension contracts are enforced: m^2, m^2 - 1, k(2k+1).
LieAlgebraRep unitary_family(UnitaryKind kind, int p, int q);

// A k-form with fixed rational coefficients, terms indexed by strictly
// increasing index tuples (0-based).
struct CalibrationForm {
  std::string name;
  Signature sig;
  int degree = 0;
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  int expected_dim = -1;  // -1: no expectation
};

// Built-in calibrations (coordinates documented in the README):
CalibrationForm g2_form();            // 3-form on (0,7), stabilizer dim 14
CalibrationForm g2_split_form();      // 3-form on (3,4), stabilizer dim 14
CalibrationForm cayley_form();        // 4-form on (0,8), stabilizer dim 21
CalibrationForm cayley_split_form();  // 4-form on (4,4), stabilizer dim 21

// {A in so(sig) : A . form = 0} under the natural action on k-forms. When the
// result is larger than expected_dim the metadata carries degenerate=true.
LieAlgebraRep form_stabilizer(Signature sig, const CalibrationForm& form);

// Parameters for the parabolic constructions in so(1, n+1). h acts on the
// spacelike R^n; elements are triples (a, A, X) realized as the bivector
// -a p^q + A - p^X over the rational Witt frame.
//   type 1: (R + h) |x R^n      type 2: h |x R^n
//   type 3: {(phi(A), A, 0)} |x R^n with phi != 0, phi|_[h,h] = 0
//   type 4: {(0, A, psi(A))} + R^m, h in so(m), psi: h ->> R^{n-m}, psi|_[h,h] = 0
struct SimParams {
  int type = 1;
  LieAlgebraRep h;  // subalgebra of so(0, n)
  int n = 0;
  std::vector<Rational> phi;               // type 3: functional on the h basis
  int m = 0;                               // type 4
  std::vector<std::vector<Rational>> psi;  // type 4: (n-m) x dim(h)
};

LieAlgebraRep sim_algebra(const SimParams& params);

// Deterministic phi / psi built from a canonical complement of [h,h] in h;
// used by the CLI grammar which has no phi/psi production.
std::vector<Rational> canonical_phi(const LieAlgebraRep& h);
std::vector<std::vector<Rational>> canonical_psi(const LieAlgebraRep& h, int codim);

enum class NeutralKind { gl, sl };

// Block algebra diag(B, -B^T) on the neutral Witt splitting W + W*, realized
// as the bivectors -sum B_ik e_i ^ e*_k; gl gives n^2 generators, sl the
// trace-free n^2 - 1.
LieAlgebraRep neutral_algebra(NeutralKind kind, int n);

// the span of all pairwise brackets [g, g]
LieAlgebraRep derived_algebra(const LieAlgebraRep& g);

struct ClosureCheck {
  bool closed = true;
  int i = -1, j = -1;  // offending pair when not closed
  Matrix residual;     // component of [g_i, g_j] outside the span
};

ClosureCheck lie_closure_check(const LieAlgebraRep& g);

// coordinates of x in the generator basis of g, if x lies in its span
std::optional<QVec> coordinates_in(const LieAlgebraRep& g, const SoElement& x);

}  // namespace spinline

#pragma once

#include <utility>
#include <vector>

#include "spinline/linalg.hpp"

namespace spinline {

// Pseudo-Euclidean signature (r, s): r timelike directions first, so the
// orthonormal frame e_0..e_{n-1} has g(e_i, e_i) = -1 for i < r and +1 after.
struct Signature {
  int r = 0, s = 0;
  int n() const { return r + s; }
  int metric(int i) const { return i < r ? -1 : 1; }
  friend bool operator==(const Signature& a, const Signature& b) = default;
};

Rational metric_pair(Signature sig, const QVec& x, const QVec& y);

// Antisymmetric coefficient table over the orthonormal frame, pairs (i, j)
// with i < j in lexicographic order.
struct Bivector {
  int n = 0;
  std::vector<Rational> c;

  Bivector() = default;
  explicit Bivector(int dim) : n(dim), c(pair_count(dim)) {}

  static int pair_count(int dim) { return dim * (dim - 1) / 2; }
  static int pair_index(int dim, int i, int j);

  Rational& at(int i, int j) { return c[pair_index(n, i, j)]; }
  const Rational& at(int i, int j) const { return c[pair_index(n, i, j)]; }
  bool is_zero() const;

  Bivector& operator+=(const Bivector& o);
  friend Bivector operator*(const Rational& t, Bivector b);
  friend bool operator==(const Bivector& a, const Bivector& b) = default;
};

Bivector wedge(const QVec& x, const QVec& y);

// The complexified Clifford representation on Delta = C^(2^floor(n/2)).
// Even n: generators are the tensor-product matrices tau_i E x..x U/V x T..
// with tau_i = i on timelike indices. Odd n: the first n-1 generators come
// from the even construction and the last one is odd_branch * i * tau_n *
// T x..x T; the unit factor makes the generator square to -g(e_n,e_n), and
// the two sign branches are the two inequivalent irreducible choices.
struct CliffordRep {
  Signature sig;
  int dim = 0;
  std::vector<Matrix> gen;
  int odd_branch = +1;  // meaningful only for odd n
};

CliffordRep build_rep(Signature sig, int odd_branch = +1);

// Exact check of gen_i gen_j + gen_j gen_i == -2 k_i delta_ij; throws with a
// witness on violation.
void verify_clifford_relations(const CliffordRep& rep);

// 2x2 building blocks (E, T, U, V) and the basis spinors u(eps) = (1, -eps*i)
// (unnormalized; every statement in scope is scale invariant).
Matrix block_E();
Matrix block_T();
Matrix block_U();
Matrix block_V();
Vec u_spinor(int eps);

// Basis labels (eps_k, ..., eps_1) stored as eps[slot-1], slot 1 being the
// rightmost tensor factor (least significant index bit; +1 -> bit 0).
struct SpinorIndex {
  std::vector<int> epsilons;

  int index() const;
  static SpinorIndex from_index(int index, int slots);
  int sign_product() const;
};

// coordinate vector of u(eps_k) x ... x u(eps_1)
Vec spinor_basis_vector(const SpinorIndex& idx);

Matrix vector_action(const CliffordRep& rep, const QVec& x);
Matrix two_form_action(const CliffordRep& rep, const Bivector& w);

// Half-spinor modules for even n, split by the sign product of basis labels.
std::pair<Subspace, Subspace> half_spinor_split(const CliffordRep& rep);

// Isotropic frames with all coordinates rational: the square-root-free
// rescaling p = e_- + e_+, q = (e_+ - e_-)/2 keeps g(p, q) = 1 and p ^ q =
// e_- ^ e_+ exactly; likewise for the neutral pairing.
struct WittFrame {
  enum class Kind { lorentz, neutral };
  Kind kind = Kind::lorentz;
  Signature sig;
  QVec p, q;                    // lorentz
  std::vector<QVec> e, e_star;  // neutral
};

WittFrame witt_frame(Signature sig, WittFrame::Kind kind);

// Identification Delta_{1,n+1} = Delta_n (x) Delta_{1,1}: the Witt pair
// (e_-, e_+) acts on tensor slot 1, so the two halves are the spans of basis
// labels with eps_1 = +1 / -1. Contract: vector_action(p) annihilates
// exactly `plus` and maps `minus` onto `plus`.
struct LorentzSplit {
  int slot = 1;        // tensor slot carrying the Witt pair
  int dim_small = 0;   // dim Delta_n
  Subspace plus, minus;

  // embedding Delta_n -> Delta_{1,n+1}, w |-> w (x) u(eps)
  Vec embed(const Vec& w, int eps) const;
};

LorentzSplit lorentz_split(const CliffordRep& rep);

}  // namespace spinline

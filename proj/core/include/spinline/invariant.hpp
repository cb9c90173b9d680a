#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "spinline/linalg.hpp"

namespace spinline {

// One joint-eigenspace of a generator family: every v in `subspace` satisfies
// A_j v = character[j] v exactly. A component of dimension >= 2 means every
// line inside it is invariant (a projective family) and is never sampled into
// individual lines.
struct InvariantComponent {
  Subspace subspace;
  Vec character;  // one scalar per input generator
  bool annihilated = false;
  bool isolated = false;
};

struct LineReport {
  std::vector<InvariantComponent> components;
  int isolated_count = 0;
  int family_count = 0;
  std::vector<Poly> residual_factors;  // non-Q(i)-split factors encountered
};

// Thrown when the generator span is not closed under commutators; the notion
// of an invariant line with a character needs a Lie algebra.
class closure_error : public std::runtime_error {
 public:
  int i, j;
  Matrix residual;
  closure_error(int i_, int j_, Matrix residual_)
      : std::runtime_error("generator span is not closed under commutators (pair " +
                           std::to_string(i_) + "," + std::to_string(j_) + ")"),
        i(i_),
        j(j_),
        residual(std::move(residual_)) {}
};

// Intersection of the kernels; the empty family gives the full space.
Subspace joint_kernel(const std::vector<Matrix>& mats, int ambient);

// All 1-dimensional invariant subspaces with Q(i)-valued characters:
//   1. D = span of pairwise commutators (characters kill D),
//   2. K = joint kernel of D (invariant, and the generators commute on it),
//   3. recursive split of K along Q(i)-eigenvalues of restricted generators.
// Complete for Q(i) characters; anything else lands in residual_factors.
LineReport invariant_lines(const std::vector<Matrix>& gens, int ambient);

struct LineCount {
  int isolated = 0;
  int families = 0;
  int annihilated_isolated = 0;
};
LineCount line_count(const LineReport& report);

// Joint kernel of {A - i t Id}; nonzero means the twisted family has a common
// eigenvector with the prescribed imaginary charges.
std::pair<bool, Subspace> spinc_exists(const std::vector<std::pair<Matrix, GaussianRational>>& pairs,
                                       int ambient);

}  // namespace spinline

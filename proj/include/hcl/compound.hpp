#pragma once

#include "hcl/linalg.hpp"
#include "hcl/symmetric_functions.hpp"

namespace hcl {

// Matrix of the action of A as a derivation on k-vectors, written in the
// lexicographic wedge basis e_{i_1} ^ ... ^ e_{i_k}. Hermitian whenever A
// is, with entry (I, J) zero as soon as |I ∩ J| < k-1.
struct CompoundMatrix {
  int base_dim = 0;
  int order = 0;
  std::vector<IndexSet> basis;  // lexicographic
  HermitianMatrix body;

  CompoundMatrix() : body(1) {}
};

// Entry rules in the sorted wedge basis:
//   diagonal (I, I):            sum of a_{ii}, i in I
//   J = (I \ {i}) u {j}:        (-1)^{pos_I(i) + pos_J(j)} a_{ij}
//   otherwise:                  0
// where pos is the 0-based position inside the sorted tuple. k = 1 returns
// A itself and k = n the 1x1 matrix [Trace(A)].
CompoundMatrix build_compound(const HermitianMatrix& A, int k);

// Hausdorff distance between the sorted spectrum of D_A and the sorted
// multiset of k-sums of the spectrum of A. Both sides are computed
// independently.
double compound_spectrum_residual(const HermitianMatrix& A, int k);

// det(D_A) via LU; equals MA_k of the spectrum of A.
double mak_via_determinant(const HermitianMatrix& A, int k);

// C'_k membership: positive definiteness of D_A.
bool in_C_k_prime(const HermitianMatrix& A, int k);

}  // namespace hcl

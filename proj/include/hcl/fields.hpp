#pragma once

#include "hcl/linalg.hpp"

#include <functional>
#include <span>
#include <string>

namespace hcl {

// A real-valued function of n complex variables together with the test
// surface it supports.
struct ScalarField {
  enum class Kind { smooth, subharmonic, pluriharmonic };

  std::string name;
  int n = 0;
  Kind kind = Kind::smooth;
  std::function<double(std::span<const cplx>)> eval;

  double operator()(std::span<const cplx> z) const { return eval(z); }
};

// |z|^2, complex Hessian Id, complex Laplacian n.
ScalarField field_quad(int n);
// |z|^4
ScalarField field_quartic(int n);
// Re(z_1^2), pluriharmonic: complex Hessian 0.
ScalarField field_pluriharmonic(int n);
// Re(z_1^3) + |z|^2, complex Laplacian n.
ScalarField field_cubic_plus_quad(int n);
// log|z - a| in one variable, subharmonic off the pole.
ScalarField field_log_pole(cplx a);
// max(Re z_1, Re z_2, 0) in two variables; maximum of pluriharmonics.
ScalarField field_max_pluriharmonic();

// Mixed Wirtinger second derivatives by central differences in the 2n real
// coordinates:
//   u_{i jbar} = ((u_{x_i x_j} + u_{y_i y_j}) + i (u_{x_i y_j} - u_{y_i x_j})) / 4.
// The upper triangle is computed and mirrored, so the result is exactly
// Hermitian.
HermitianMatrix fd_complex_hessian(const ScalarField& field, std::span<const cplx> z, double h);

}  // namespace hcl

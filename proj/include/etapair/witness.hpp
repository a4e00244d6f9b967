#pragma once

#include <Eigen/Dense>

namespace etapair::witness {

/// Eigenvalues of a partial transpose inside (-ppt_tolerance, 0) count as
/// zero, so boundary-separable states classify as separable under
/// floating-point noise.
inline constexpr double ppt_tolerance = 1e-10;

/// Bipartite density matrix with an explicit dim_a x dim_b tensor split.
/// Construction checks Hermiticity and unit trace (1e-12); positivity is
/// checked where an eigendecomposition is taken anyway.
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd matrix, Eigen::Index dim_a, Eigen::Index dim_b);

  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  Eigen::Index dim_a() const { return dim_a_; }
  Eigen::Index dim_b() const { return dim_b_; }

 private:
  Eigen::MatrixXcd mat_;
  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
};

/// Transpose on the B factor; Hermitian and trace-preserving.
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose, zero iff PPT.
double negativity(const DensityMatrix& rho);

/// Peres-Horodecki test: no partial-transpose eigenvalue below -ppt_tolerance.
bool is_ppt(const DensityMatrix& rho);

/// -sum lambda ln lambda over the spectrum (nats); eigenvalues below 1e-14
/// are skipped, and anything below -ppt_tolerance is a domain error.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace etapair::witness

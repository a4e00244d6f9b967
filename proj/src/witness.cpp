#include "etapair/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace etapair::witness {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix, Eigen::Index dim_a, Eigen::Index dim_b)
    : mat_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {
  if (mat_.rows() != mat_.cols()) throw std::domain_error("density matrix must be square");
  if (dim_a_ < 1 || dim_b_ < 1 || dim_a_ * dim_b_ != mat_.rows()) {
    throw std::domain_error("bipartition does not factor the matrix dimension");
  }
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - std::complex<double>(1.0)) > 1e-12) {
    throw std::domain_error("density matrix trace differs from one");
  }
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho) {
  const Eigen::Index da = rho.dim_a();
  const Eigen::Index db = rho.dim_b();
  Eigen::MatrixXcd out(rho.dim(), rho.dim());
  for (Eigen::Index ia = 0; ia < da; ++ia) {
    for (Eigen::Index ja = 0; ja < da; ++ja) {
      out.block(ia * db, ja * db, db, db) =
          rho.matrix().block(ia * db, ja * db, db, db).transpose();
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(partial_transpose(rho),
                                                         Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -ppt_tolerance) total += -lambda;
  }
  return total;
}

bool is_ppt(const DensityMatrix& rho) { return negativity(rho) == 0.0; }

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -ppt_tolerance) {
      throw std::domain_error("matrix is not positive semidefinite");
    }
    if (lambda < 1e-14) continue;
    entropy -= lambda * std::log(lambda);
  }
  return std::max(entropy, 0.0);
}

}  // namespace etapair::witness

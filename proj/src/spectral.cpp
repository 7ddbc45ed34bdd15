#include "frde/spectral.hpp"

#include <stdexcept>

namespace frde {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("symmetric matrix must be square");
  if (!m_.allFinite()) throw std::invalid_argument("invalid matrix");
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw std::invalid_argument("matrix is not symmetric");
}

EigenResult eig_sym(const SymmetricMatrix& m, bool want_vectors) {
  if (!m.data().allFinite()) throw std::invalid_argument("invalid matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(m.data(), want_vectors ? Eigen::ComputeEigenvectors
                                        : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  EigenResult result;
  result.eigenvalues = solver.eigenvalues();
  if (want_vectors) result.eigenvectors = solver.eigenvectors();
  return result;
}

double min_eig(const SymmetricMatrix& m) {
  return eig_sym(m, false).eigenvalues(0);
}

double max_eig(const SymmetricMatrix& m) {
  const auto& ev = eig_sym(m, false).eigenvalues;
  return ev(ev.size() - 1);
}

Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& m, double tol) {
  if (!m.allFinite()) throw std::invalid_argument("invalid matrix");
  const Eigen::Index dim = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd gram = m.transpose() * m;
  const EigenResult eig = eig_sym(SymmetricMatrix(0.5 * (gram + gram.transpose())), true);
  const double lambda_max = eig.eigenvalues(dim - 1);
  if (lambda_max <= 0.0) return Eigen::MatrixXd::Identity(dim, dim);
  const double cutoff = tol * tol * lambda_max;
  Eigen::Index count = 0;
  while (count < dim && eig.eigenvalues(count) <= cutoff) ++count;
  return eig.eigenvectors->leftCols(count);
}

}  // namespace frde

#pragma once

#include <Eigen/Dense>

#include <optional>

namespace frde {

/// Dense real symmetric matrix. Construction rejects non-square inputs and
/// anything whose max-norm asymmetry exceeds 1e-12.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  const Eigen::MatrixXd& data() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Eigen::MatrixXd m_;
};

struct EigenResult {
  Eigen::VectorXd eigenvalues;                 // ascending
  std::optional<Eigen::MatrixXd> eigenvectors; // orthonormal columns, same order
};

/// Full symmetric eigendecomposition. Throws "invalid matrix" on non-finite
/// entries. Deterministic for a fixed input.
EigenResult eig_sym(const SymmetricMatrix& m, bool want_vectors);

double min_eig(const SymmetricMatrix& m);
double max_eig(const SymmetricMatrix& m);

/// Orthonormal basis of the numerical null space of an arbitrary (possibly
/// rectangular) matrix, computed from the eigendecomposition of m^T m. A
/// direction v qualifies when its m^T m eigenvalue is at most
/// tol^2 * lambda_max(m^T m). Returns a dim x 0 matrix when m is invertible
/// at tolerance.
Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& m, double tol = 1e-8);

}  // namespace frde

#pragma once

#include <Eigen/Dense>

namespace mds {

/// exp(A) by scaling and squaring with a diagonal (6,6) Padé approximant.
/// A is scaled by 2^-s so that ||A / 2^s||_1 <= 1/2, the approximant
/// r(X) = q(-X)^-1 q(X) is evaluated by LU solve and squared s times.
Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& a);

}  // namespace mds

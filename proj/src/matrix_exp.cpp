#include "mds/matrix_exp.hpp"

#include <cmath>

#include "mds/error.hpp"

namespace mds {

namespace {

constexpr int kOrder = 6;

// c_k = (2q - k)! q! / ((2q)! k! (q - k)!) for q = 6.
constexpr double kPadeCoefficients[kOrder + 1] = {
    1.0, 1.0 / 2.0, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0,
};

}  // namespace

Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Data, "matrix exponential needs a square matrix");
  const auto n = a.rows();
  if (n == 0) return a;
  if (!a.allFinite()) throw Error(ErrorKind::Numeric, "matrix exponential of a non-finite matrix");

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd x = a / std::ldexp(1.0, squarings);

  // Even and odd parts: q(X) = V + U, q(-X) = V - U.
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = id;
  Eigen::MatrixXd even = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd odd = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k <= kOrder; ++k) {
    if (k > 0) power = power * x;
    (k % 2 == 0 ? even : odd) += kPadeCoefficients[k] * power;
  }
  const Eigen::MatrixXd numerator = even + odd;
  const Eigen::MatrixXd denominator = even - odd;

  Eigen::MatrixXd result = denominator.partialPivLu().solve(numerator);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace mds

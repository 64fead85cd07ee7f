#include "coexnull/array.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "coexnull/error.hpp"
#include "coexnull/units.hpp"

namespace coexnull {

ComplexVector steering_vector(int K, double theta) {
  if (K < 1) throw InvalidArgument("steering_vector: K must be >= 1");
  const double phase = -kPi * std::sin(theta);
  ComplexVector a(K);
  for (int m = 0; m < K; ++m) a(m) = std::polar(1.0, phase * m);
  return a;
}

BeamWeights lcmv_weights(int K, double served_theta,
                         std::span<const double> null_thetas) {
  if (K < 1) throw InvalidArgument("lcmv_weights: K must be >= 1");
  const auto constraints = static_cast<int>(null_thetas.size()) + 1;
  if (constraints > K) {
    throw InfeasibleConfiguration(
        "lcmv_weights: " + std::to_string(null_thetas.size()) +
        " nulls exceed the K-1 = " + std::to_string(K - 1) +
        " available degrees of freedom");
  }

  Eigen::MatrixXcd C(K, constraints);
  C.col(0) = steering_vector(K, served_theta);
  for (int n = 1; n < constraints; ++n) {
    C.col(n) = steering_vector(K, null_thetas[static_cast<std::size_t>(n - 1)]);
  }

  // Minimum-norm solution of C^H w = e_1, i.e. w = C (C^H C)^-1 e_1, taken
  // through the SVD so the conditioning of C (not C^H C) governs accuracy.
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      C, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double s_min = s(s.size() - 1);
  if (!(s_min > 0.0) || s(0) / s_min > kMaxConstraintCondition) {
    throw InfeasibleConfiguration(
        "lcmv_weights: constraint matrix is ill-conditioned (cond = " +
        std::to_string(s_min > 0.0 ? s(0) / s_min : INFINITY) + ")");
  }
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(constraints);
  f(0) = 1.0;
  const Eigen::VectorXcd coeffs =
      (svd.matrixV().adjoint() * f).cwiseQuotient(s.cast<std::complex<double>>());
  ComplexVector w = svd.matrixU() * coeffs;
  w /= w.norm();

  return BeamWeights{std::move(w), served_theta,
                     std::vector<double>(null_thetas.begin(), null_thetas.end()),
                     K};
}

double array_gain(const BeamWeights& weights, double theta) {
  return std::norm(weights.w.dot(steering_vector(weights.K, theta)));
}

}  // namespace coexnull

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace coexnull {

using ComplexVector = Eigen::VectorXcd;

/// Precoding vector of a K-element half-wavelength ULA together with the
/// constraint set it was designed for. ||w|| == 1.
struct BeamWeights {
  ComplexVector w;
  double served_theta = 0.0;
  std::vector<double> null_thetas;
  int K = 1;
};

/// ULA response toward theta (radians from broadside):
///   a_m = exp(-j * pi * m * sin(theta)),  m = 0..K-1.
/// This sign convention is used throughout the library.
ComplexVector steering_vector(int K, double theta);

/// Largest constraint-matrix condition number accepted by lcmv_weights.
inline constexpr double kMaxConstraintCondition = 1e8;

/// Minimum-norm (identity-covariance LCMV) precoder with unit response
/// toward served_theta and zero response toward every null angle, rescaled
/// to unit norm.
///
/// Throws InfeasibleConfiguration when there are more than K-1 nulls or the
/// constraint matrix [a(served), a(null_1), ...] has condition number above
/// kMaxConstraintCondition.
BeamWeights lcmv_weights(int K, double served_theta,
                         std::span<const double> null_thetas);

/// Power gain |w^H a(theta)|^2. Lies in [0, K] for unit-norm weights.
double array_gain(const BeamWeights& weights, double theta);

}  // namespace coexnull

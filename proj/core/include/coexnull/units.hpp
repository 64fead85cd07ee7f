#pragma once

namespace coexnull {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 10^((p - 30) / 10).
double dbm_to_watts(double dbm);

/// Inverse of dbm_to_watts. Throws InvalidArgument for watts <= 0.
double watts_to_dbm(double watts);

double db_to_linear(double db);
double linear_to_db(double linear);

/// d^(-exponent). Throws InvalidArgument for distance <= 0.
double pathloss_gain(double distance_m, double exponent);

/// Received power in dBm for a transmitter at tx_dbm seen through
/// pathloss_gain(distance_m, exponent).
double received_dbm(double tx_dbm, double distance_m, double exponent);

}  // namespace coexnull

#include "coexnull/units.hpp"

#include <cmath>
#include <string>

#include "coexnull/error.hpp"

namespace coexnull {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    throw InvalidArgument("watts_to_dbm: power must be positive, got " +
                          std::to_string(watts));
  }
  return 10.0 * std::log10(watts) + 30.0;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double pathloss_gain(double distance_m, double exponent) {
  if (!(distance_m > 0.0)) {
    throw InvalidArgument("pathloss_gain: distance must be positive, got " +
                          std::to_string(distance_m));
  }
  return std::pow(distance_m, -exponent);
}

double received_dbm(double tx_dbm, double distance_m, double exponent) {
  if (!(distance_m > 0.0)) {
    throw InvalidArgument("received_dbm: distance must be positive, got " +
                          std::to_string(distance_m));
  }
  return tx_dbm - 10.0 * exponent * std::log10(distance_m);
}

}  // namespace coexnull

#include "uavmob/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "uavmob/common.hpp"

namespace uavmob {

double element_gain_dbi(const AntennaConfig& cfg, double zenith_deg,
                        double azimuth_offset_deg) {
  const double tv = (zenith_deg - 90.0) / cfg.theta_3db_deg;
  const double th = azimuth_offset_deg / cfg.phi_3db_deg;
  const double att_v = std::min(12.0 * tv * tv, cfg.sla_v_db);
  const double att_h = std::min(12.0 * th * th, cfg.a_m_db);
  return cfg.element_gain_dbi - std::min(att_v + att_h, cfg.a_m_db);
}

double array_factor_from_cos_db(const AntennaConfig& cfg, double cos_zenith) {
  const int m = cfg.rows;
  if (m <= 1) return 0.0;
  const double peak_db = 10.0 * std::log10(static_cast<double>(m));
  // Steered phase term: weights point the main lobe at zenith 90 + downtilt.
  const double cos_steer = std::cos(deg2rad(90.0 + cfg.downtilt_deg));
  const double psi = cos_zenith - cos_steer;
  const double x = kPi * cfg.dv_over_lambda * psi;
  const double den = std::sin(x);
  double af_lin;
  if (std::abs(den) < 1e-12) {
    af_lin = static_cast<double>(m);  // coherent sum limit
  } else {
    const double ratio = std::sin(m * x) / den;
    af_lin = ratio * ratio / m;
  }
  double af_db = (af_lin > 0.0) ? 10.0 * std::log10(af_lin) : peak_db - 60.0;
  return std::max(af_db, peak_db - 60.0);
}

double array_factor_db(const AntennaConfig& cfg, double zenith_deg) {
  return array_factor_from_cos_db(cfg, std::cos(deg2rad(zenith_deg)));
}

double composite_gain_dbi(const AntennaConfig& cfg, double zenith_deg,
                          double azimuth_offset_deg) {
  return element_gain_dbi(cfg, zenith_deg, azimuth_offset_deg) +
         array_factor_db(cfg, zenith_deg);
}

}  // namespace uavmob

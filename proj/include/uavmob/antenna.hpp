#pragma once

namespace uavmob {

// Sectorized BS antenna: 3GPP-style element pattern combined with an M-row
// vertical array steered by an electrical downtilt. Polarization is collapsed
// to a single effective port.
struct AntennaConfig {
  double element_gain_dbi = 8.0;  // element peak gain
  double theta_3db_deg = 65.0;    // vertical half-power beamwidth
  double phi_3db_deg = 65.0;      // horizontal half-power beamwidth
  double sla_v_db = 30.0;         // vertical sidelobe attenuation limit
  double a_m_db = 30.0;           // front-back attenuation limit
  int rows = 8;                   // M, vertical array elements
  int cols = 1;                   // N, horizontal (unused by the pattern math)
  double dv_over_lambda = 0.5;    // vertical element spacing
  double downtilt_deg = 10.0;     // electrical steering below horizon
};

// Element pattern, dBi. zenith 0 = up, 90 = horizon; azimuth offset relative
// to boresight.
double element_gain_dbi(const AntennaConfig& cfg, double zenith_deg,
                        double azimuth_offset_deg);

// Vertical array factor, dB. Peak 10*log10(rows) at zenith = 90 + downtilt;
// power floor clamped 60 dB below the peak.
double array_factor_db(const AntennaConfig& cfg, double zenith_deg);

// Same, from a precomputed cos(zenith) to spare a trig call in hot loops.
double array_factor_from_cos_db(const AntennaConfig& cfg, double cos_zenith);

double composite_gain_dbi(const AntennaConfig& cfg, double zenith_deg,
                          double azimuth_offset_deg);

}  // namespace uavmob

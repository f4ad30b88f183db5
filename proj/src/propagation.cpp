#include "uavmob/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "uavmob/common.hpp"

namespace uavmob {

namespace {
constexpr std::uint64_t kLosSalt = 0x4c4f535f53414c54ULL;
constexpr std::uint64_t kShadowSalt = 0x53485f4649454c44ULL;

std::int64_t node_index(double coord_m, double grid_m) {
  return static_cast<std::int64_t>(std::floor(coord_m / grid_m));
}

std::uint64_t node_hash(std::uint64_t field_seed, int cell_id, std::int64_t ix,
                        std::int64_t iy) {
  return mix_seed(mix_seed(field_seed ^ kLosSalt, static_cast<std::uint64_t>(cell_id)),
                  static_cast<std::uint64_t>(ix) * 0x100000001b3ULL ^
                      static_cast<std::uint64_t>(iy));
}
}  // namespace

double los_probability(const PropagationConfig& cfg, double d2d_m, double ue_height_m) {
  if (ue_height_m >= cfg.los_full_height_m) return 1.0;
  double p_ground;
  if (cfg.scenario == Scenario::UMA) {
    if (d2d_m <= 0.0) {
      p_ground = 1.0;
    } else {
      const double e = std::exp(-d2d_m / 63.0);
      p_ground = std::min(18.0 / d2d_m, 1.0) * (1.0 - e) + e;
    }
  } else {
    p_ground = (d2d_m <= 10.0) ? 1.0 : std::exp(-(d2d_m - 10.0) / 1000.0);
  }
  const double w = std::max(ue_height_m, 0.0) / cfg.los_full_height_m;
  return p_ground + (1.0 - p_ground) * w;
}

double path_loss_los_db(const PropagationConfig& cfg, double d3d_m) {
  const double d = std::max(d3d_m, 1.0);
  return cfg.pl_los_a + cfg.pl_los_b * std::log10(d) +
         cfg.pl_los_c * std::log10(cfg.carrier_ghz);
}

double path_loss_nlos_db(const PropagationConfig& cfg, double d3d_m,
                         double ue_height_m) {
  const double d = std::max(d3d_m, 1.0);
  return cfg.pl_nlos_a + cfg.pl_nlos_b * std::log10(d) +
         cfg.pl_nlos_c * std::log10(cfg.carrier_ghz) -
         cfg.pl_nlos_height_db_per_m * (ue_height_m - 1.5);
}

double path_loss_db(const PropagationConfig& cfg, double d3d_m, double ue_height_m,
                    bool los) {
  const double pl_los = path_loss_los_db(cfg, d3d_m);
  if (los) return pl_los;
  return std::max(pl_los, path_loss_nlos_db(cfg, d3d_m, ue_height_m));
}

double shadow_sigma_db(const PropagationConfig& cfg, double ue_height_m, bool los) {
  const double base = los ? cfg.sf_sigma_los_db : cfg.sf_sigma_nlos_db;
  return std::max(cfg.sf_sigma_floor_db,
                  base * std::exp(-ue_height_m / cfg.sf_height_scale_m));
}

ShadowingField::ShadowingField(std::uint64_t field_seed, int cell_id,
                               double corr_distance_m, int n_waves) {
  std::mt19937_64 rng(mix_seed(field_seed ^ kShadowSalt, static_cast<std::uint64_t>(cell_id)));
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  waves_.resize(n_waves);
  for (auto& w : waves_) {
    // Radial wavenumber from the spectral CDF of the exponential
    // autocorrelation: F(k) = 1 - 1/sqrt(1 + (k*dc)^2).
    const double u = std::min(uni(rng), 1.0 - 1e-12);
    const double inv = 1.0 / (1.0 - u);
    const double k = std::sqrt(inv * inv - 1.0) / corr_distance_m;
    const double dir = uni(rng) * 2.0 * kPi;
    w.kx = k * std::cos(dir);
    w.ky = k * std::sin(dir);
    w.phase = uni(rng) * 2.0 * kPi;
  }
  amp_ = std::sqrt(2.0 / static_cast<double>(n_waves));
}

double ShadowingField::value(double x_m, double y_m) const {
  double s = 0.0;
  for (const auto& w : waves_) {
    s += std::cos(w.kx * x_m + w.ky * y_m + w.phase);
  }
  return amp_ * s;
}

double shadowing_db(const PropagationConfig& cfg, std::uint64_t field_seed, int cell_id,
                    const Vec2& position, double ue_height_m, bool los) {
  const ShadowingField field(field_seed, cell_id, cfg.sf_corr_distance_m);
  return shadow_sigma_db(cfg, ue_height_m, los) * field.value(position.x, position.y);
}

Vec2 sample_node_center(const PropagationConfig& cfg, const Vec2& position) {
  const double g = cfg.sample_grid_m;
  return Vec2{(node_index(position.x, g) + 0.5) * g,
              (node_index(position.y, g) + 0.5) * g};
}

bool los_state(const PropagationConfig& cfg, std::uint64_t field_seed, int cell_id,
               const Vec2& position, const Vec2& site_position, double ue_height_m) {
  const double g = cfg.sample_grid_m;
  const std::uint64_t h = node_hash(field_seed, cell_id, node_index(position.x, g),
                                    node_index(position.y, g));
  const Vec2 node = sample_node_center(cfg, position);
  const double node_d2d =
      std::hypot(node.x - site_position.x, node.y - site_position.y);
  return hash_unit(h) < los_probability(cfg, node_d2d, ue_height_m);
}

double noise_power_dbm(const PropagationConfig& cfg) {
  return -174.0 + cfg.noise_figure_db + 10.0 * std::log10(cfg.bandwidth_mhz * 1e6);
}

double coupling_loss_db(const Deployment& dep, const AntennaConfig& ant,
                        const PropagationConfig& prop, std::uint64_t field_seed,
                        const Cell& cell, const UePose& ue) {
  const LinkAngles a = angles_to(dep, cell, ue);
  const Vec2& site = dep.site_positions[cell.site_index];
  const bool los = los_state(prop, field_seed, cell.id, ue.xy, site, ue.height_m);
  const Vec2 node = sample_node_center(prop, ue.xy);

  const double pl = path_loss_db(prop, a.d3d_m, ue.height_m, los);
  const double sf = shadowing_db(prop, field_seed, cell.id, node, ue.height_m, los);
  const double gain = composite_gain_dbi(ant, a.zenith_deg, a.azimuth_offset_deg);
  return pl + sf - gain;
}

}  // namespace uavmob

#pragma once

#include <cstdint>
#include <vector>

#include "uavmob/antenna.hpp"
#include "uavmob/geometry.hpp"

namespace uavmob {

enum class Scenario { UMA, RMA };

struct PropagationConfig {
  Scenario scenario = Scenario::UMA;
  double carrier_ghz = 2.0;
  double los_full_height_m = 100.0;  // at and above this UE height every link is LOS

  // Path-loss coefficients: A + B*log10(d3d_m) + C*log10(f_ghz).
  double pl_los_a = 28.0;
  double pl_los_b = 22.0;
  double pl_los_c = 20.0;
  double pl_nlos_a = 13.54;
  double pl_nlos_b = 39.08;
  double pl_nlos_c = 20.0;
  double pl_nlos_height_db_per_m = 0.6;  // NLOS excess shrinks with UE height

  // Lognormal shadowing: sigma decays with height to a floor; exponential
  // spatial autocorrelation exp(-d/corr_distance) per cell.
  double sf_sigma_los_db = 4.0;
  double sf_sigma_nlos_db = 6.0;
  double sf_sigma_floor_db = 1.0;
  double sf_height_scale_m = 100.0;
  double sf_corr_distance_m = 50.0;

  // LOS state and the shadowing sample are frozen per (drop, cell, grid node).
  double sample_grid_m = 10.0;

  double noise_figure_db = 9.0;
  double bandwidth_mhz = 10.0;
};

// Probability of line of sight. Linear in UE height between the terrestrial
// value and 1.0 at los_full_height_m.
double los_probability(const PropagationConfig& cfg, double d2d_m, double ue_height_m);

double path_loss_los_db(const PropagationConfig& cfg, double d3d_m);
double path_loss_nlos_db(const PropagationConfig& cfg, double d3d_m, double ue_height_m);

// NLOS is never below LOS at the same geometry. d3d below 1 m clamps to 1 m.
double path_loss_db(const PropagationConfig& cfg, double d3d_m, double ue_height_m,
                    bool los);

double shadow_sigma_db(const PropagationConfig& cfg, double ue_height_m, bool los);

// Unit-variance Gaussian random field with isotropic exponential
// autocorrelation exp(-d/corr_distance), realized as a sum of sinusoids whose
// wave numbers follow the matching radial spectrum. A field is a deterministic
// function of (field_seed, cell_id).
class ShadowingField {
 public:
  ShadowingField(std::uint64_t field_seed, int cell_id, double corr_distance_m,
                 int n_waves = 64);
  double value(double x_m, double y_m) const;

 private:
  struct Wave {
    double kx, ky, phase;
  };
  std::vector<Wave> waves_;
  double amp_;
};

// Shadowing in dB at an exact position (continuous in space).
double shadowing_db(const PropagationConfig& cfg, std::uint64_t field_seed, int cell_id,
                    const Vec2& position, double ue_height_m, bool los);

// Center of the sample grid node containing the position.
Vec2 sample_node_center(const PropagationConfig& cfg, const Vec2& position);

// LOS draw frozen per (field_seed, cell, grid node); pure function.
bool los_state(const PropagationConfig& cfg, std::uint64_t field_seed, int cell_id,
               const Vec2& position, double ue_height_m);

double noise_power_dbm(const PropagationConfig& cfg);

// Path loss + shadowing - composite antenna gain for one BS->UE link. LOS
// state and the shadowing sample are taken at the enclosing grid node; path
// loss and antenna gain follow the exact geometry.
double coupling_loss_db(const Deployment& dep, const AntennaConfig& ant,
                        const PropagationConfig& prop, std::uint64_t field_seed,
                        const Cell& cell, const UePose& ue);

}  // namespace uavmob

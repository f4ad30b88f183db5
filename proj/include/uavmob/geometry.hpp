#pragma once

#include <random>
#include <vector>

#include "uavmob/common.hpp"

namespace uavmob {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Cell {
  int id = -1;
  int site_index = -1;
  double azimuth_deg = 0.0;   // sector boresight, counterclockwise from +x
  double tx_power_dbm = 46.0;
};

// Hexagonal multi-site layout: center site plus two rings (1 + 6 + 12 = 19),
// three sectors per site. Immutable after construction.
struct Deployment {
  double isd_m = 0.0;
  int n_sites = 0;
  int sectors_per_site = 0;
  double bs_height_m = 0.0;
  std::vector<Vec2> site_positions;
  std::vector<Cell> cells;
};

struct UePose {
  Vec2 xy;
  double height_m = 0.0;   // AGL, constant over a drop
  double heading_deg = 0.0;
  double speed_mps = 0.0;  // constant over a drop
};

struct LinkAngles {
  double zenith_deg = 0.0;          // 0 = straight up, 90 = horizontal, 180 = straight down
  double azimuth_offset_deg = 0.0;  // relative to sector boresight, in (-180, 180]
  double d2d_m = 0.0;
  double d3d_m = 0.0;
};

// 19-site hex grid with sector boresights {30, 150, 270} degrees per site.
// Cell ids are dense from 0 (site-major). Throws ConfigError for isd <= 0.
Deployment build_layout(double isd_m, double bs_height_m, double tx_power_dbm = 46.0);

// Straight-line motion over dt. A step that would leave the disc of radius
// bound_radius_m around the grid center redraws a uniformly random heading
// among those that keep the UE inside.
UePose step_pose(const UePose& pose, double dt_s, double bound_radius_m,
                 std::mt19937_64& rng);

// BS->UE direction in the antenna's angle convention. Throws
// std::invalid_argument if the UE coincides with the BS antenna point.
LinkAngles angles_to(const Deployment& dep, const Cell& cell, const UePose& ue);

}  // namespace uavmob

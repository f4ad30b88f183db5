#include "uavmob/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace uavmob {

namespace {

// Hex lattice coordinates (i, j) with |i| <= 2, |j| <= 2, |i + j| <= 2 give the
// center plus the first two rings. Sorted by (ring, angle) for stable site ids.
struct SiteSpec {
  Vec2 pos;
  double ring;
  double angle;
};

}  // namespace

Deployment build_layout(double isd_m, double bs_height_m, double tx_power_dbm) {
  if (!(isd_m > 0.0)) {
    throw ConfigError("isd_m must be > 0");
  }
  const Vec2 a1{isd_m, 0.0};
  const Vec2 a2{isd_m * 0.5, isd_m * std::sqrt(3.0) * 0.5};

  std::vector<SiteSpec> specs;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      if (std::abs(i + j) > 2) continue;
      Vec2 p{i * a1.x + j * a2.x, i * a1.y + j * a2.y};
      double r = std::hypot(p.x, p.y);
      double ring = (r < 0.5 * isd_m) ? 0.0 : (r < 1.5 * isd_m ? 1.0 : 2.0);
      double ang = std::atan2(p.y, p.x);
      if (ang < -1e-12) ang += 2.0 * kPi;
      specs.push_back({p, ring * 1000.0 + r, ang});
    }
  }
  std::sort(specs.begin(), specs.end(), [](const SiteSpec& a, const SiteSpec& b) {
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.angle < b.angle;
  });

  Deployment dep;
  dep.isd_m = isd_m;
  dep.n_sites = static_cast<int>(specs.size());
  dep.sectors_per_site = 3;
  dep.bs_height_m = bs_height_m;
  dep.site_positions.reserve(specs.size());
  for (const auto& s : specs) dep.site_positions.push_back(s.pos);

  static constexpr double kBoresights[3] = {30.0, 150.0, 270.0};
  int id = 0;
  for (int s = 0; s < dep.n_sites; ++s) {
    for (int k = 0; k < 3; ++k) {
      dep.cells.push_back(Cell{id++, s, kBoresights[k], tx_power_dbm});
    }
  }
  return dep;
}

UePose step_pose(const UePose& pose, double dt_s, double bound_radius_m,
                 std::mt19937_64& rng) {
  UePose next = pose;
  const double step = pose.speed_mps * dt_s;
  if (step == 0.0) return next;

  auto advance = [&](double heading_deg) {
    const double h = deg2rad(heading_deg);
    return Vec2{pose.xy.x + step * std::cos(h), pose.xy.y + step * std::sin(h)};
  };
  auto inside = [&](const Vec2& p) {
    return p.x * p.x + p.y * p.y <= bound_radius_m * bound_radius_m;
  };

  Vec2 cand = advance(pose.heading_deg);
  if (!inside(cand)) {
    // Bounce: uniformly random heading among those that stay in the disc.
    std::uniform_real_distribution<double> u360(0.0, 360.0);
    for (int tries = 0; tries < 1024; ++tries) {
      const double h = u360(rng);
      cand = advance(h);
      if (inside(cand)) {
        next.heading_deg = h;
        next.xy = cand;
        return next;
      }
    }
    // Pathological corner (step >> radius): head for the center.
    next.heading_deg = rad2deg(std::atan2(-pose.xy.y, -pose.xy.x));
    cand = advance(next.heading_deg);
    if (!inside(cand)) cand = Vec2{0.0, 0.0};
    next.xy = cand;
    return next;
  }
  next.xy = cand;
  return next;
}

LinkAngles angles_to(const Deployment& dep, const Cell& cell, const UePose& ue) {
  const Vec2& site = dep.site_positions[cell.site_index];
  const double dx = ue.xy.x - site.x;
  const double dy = ue.xy.y - site.y;
  const double dz = ue.height_m - dep.bs_height_m;

  LinkAngles a;
  a.d2d_m = std::hypot(dx, dy);
  a.d3d_m = std::hypot(a.d2d_m, dz);
  if (a.d3d_m < 1e-9) {
    throw std::invalid_argument("angles_to: UE coincides with the BS antenna point");
  }
  a.zenith_deg = rad2deg(std::atan2(a.d2d_m, dz));
  a.azimuth_offset_deg =
      (a.d2d_m == 0.0) ? 0.0 : wrap_deg(rad2deg(std::atan2(dy, dx)) - cell.azimuth_deg);
  return a;
}

}  // namespace uavmob

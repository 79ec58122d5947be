#pragma once

#include "mdc/moebius.hpp"
#include "mdc/realquad.hpp"

namespace mdc {

// Circle with exact center and exact squared radius. Radii themselves may
// live outside the field after a Moebius image, squared radii never do.
struct ExactCircle {
  CycloNumber center;
  RealQuad radius_sq;

  bool operator==(const ExactCircle& o) const {
    return center == o.center && radius_sq == o.radius_sq;
  }
};

// Open round disk: the interior or the exterior (with infinity) of a circle.
struct ExactDisk {
  ExactCircle circle;
  bool interior = true;
};

// Image of a circle/disk under an exact Moebius map. Throws when the image
// degenerates to a line (pole on the circle).
ExactCircle map_circle(const ExactMoebius& w, const ExactCircle& c);
ExactDisk map_disk(const ExactMoebius& w, const ExactDisk& d);

// Disjointness of open disks; tangency and a shared circle with opposite
// sides both count as disjoint.
bool disks_disjoint_open(const ExactDisk& a, const ExactDisk& b);
// Disjointness of the closures (strict inequalities).
bool disks_disjoint_closed(const ExactDisk& a, const ExactDisk& b);

// --- floating mirror ------------------------------------------------------

struct FloatCircle {
  FloatC center;
  double radius_sq = 0.0;

  bool approx_same(const FloatCircle& o, double eps) const;
};

struct FloatDisk {
  FloatCircle circle;
  bool interior = true;
};

FloatCircle map_circle(const FloatMoebius& w, const FloatCircle& c);
FloatDisk map_disk(const FloatMoebius& w, const FloatDisk& d);
bool disks_disjoint_open(const FloatDisk& a, const FloatDisk& b, double eps);
bool disks_disjoint_closed(const FloatDisk& a, const FloatDisk& b, double eps);

FloatCircle embed_circle(const ExactCircle& c);
FloatDisk embed_disk(const ExactDisk& d);

// Exact shortest nonzero vector of the lattice Z + Z tau (squared length),
// by Lagrange-Gauss reduction with exact comparisons.
RealQuad lattice_min_norm_sq(const CycloNumber& tau_value);

}  // namespace mdc

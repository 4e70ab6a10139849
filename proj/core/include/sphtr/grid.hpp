#pragma once

#include <array>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sphtr/vec3.hpp"

namespace sphtr {

enum class GridMethod { kErp, kCube, kIcosa };

const char* grid_method_name(GridMethod m);

struct ErpParams {
  int height = 0;   // H, rows of the latitude/longitude lattice
  int width = 0;    // W = 2H
  int patch_h = 0;  // P_h
  int patch_w = 0;  // P_w
};

struct CubeParams {
  int edge = 0;  // e, pixels per cube-face side
};

struct IcosaParams {
  int div = 0;          // subdivision depth
  int patch_scale = 0;  // k, regroups to N = 20*4^k patches
};

// Ordered unit-sphere point set with patch grouping. Points are stored
// patch-major: point(j, s) = points[j * patch_size + s].
struct SamplingGrid {
  GridMethod method = GridMethod::kErp;
  std::vector<Vec3> points;
  int num_patches = 0;  // N
  int patch_size = 0;   // D

  ErpParams erp;
  CubeParams cube;
  IcosaParams icosa;

  int num_points() const { return num_patches * patch_size; }

  const Vec3& point(int patch, int slot) const {
    return points[static_cast<size_t>(patch) * patch_size + slot];
  }

  // Patch-major view over the shared storage; concatenating the spans
  // reproduces `points`.
  std::vector<std::span<const Vec3>> patch_view() const;

  // "method=icosa div=3 k=0" style; used in CSV headers and reports.
  std::string param_string() const;
};

// Latitude is linear in the row index, longitude in the column index, both
// through pixel centers. Points are patch-major: patches row-major over the
// (H/P_h) x (W/P_w) patch lattice, slots row-major within a patch.
SamplingGrid build_erp_grid(int height, int width, int patch_h, int patch_w);

// Six e x e face lattices of a circumscribing cube, faces ordered
// +X,-X,+Y,-Y,+Z,-Z, each direction normalized onto the sphere.
SamplingGrid build_cube_grid(int edge);

// Canonical icosahedron, each face barycentrically subdivided `div` times;
// one sample per sub-triangle (planar centroid, normalized). `patch_scale`
// only regroups the fixed point order into N = 20*4^k patches.
SamplingGrid build_icosa_grid(int div, int patch_scale);

// Canonical icosahedron used by both the grid builder and the rotation
// groups: golden-ratio vertices normalized to the unit sphere, sorted
// lexicographically by (z, y, x); faces listed as vertex-index triples
// (i < j < k), sorted, wound outward.
struct Icosahedron {
  std::array<Vec3, 12> vertices;
  std::array<std::array<int, 3>, 20> faces;

  Vec3 face_centroid(int f) const;  // normalized
};

const Icosahedron& canonical_icosahedron();

// CSV with a versioned header line naming method + params, then rows
// (patch_index, slot_index, x, y, z).
void write_grid_csv(const SamplingGrid& grid, std::ostream& out);

}  // namespace sphtr

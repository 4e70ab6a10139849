#include "sphtr/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "sphtr/errors.hpp"

namespace sphtr {

const char* solid_name(Solid s) {
  return s == Solid::kCube ? "cube" : "icosa";
}

namespace {

constexpr double kDedupTol = 1e-8;

bool contains(const std::vector<Mat3>& set, const Mat3& m) {
  for (const auto& e : set)
    if (max_abs_diff(e, m) < kDedupTol) return true;
  return false;
}

std::pair<Mat3, Mat3> generators(Solid solid) {
  if (solid == Solid::kCube) {
    return {axis_angle({0, 0, 1}, std::numbers::pi / 2.0),
            axis_angle({1, 1, 1}, 2.0 * std::numbers::pi / 3.0)};
  }
  const Icosahedron& ico = canonical_icosahedron();
  return {axis_angle(ico.vertices[0], 2.0 * std::numbers::pi / 5.0),
          axis_angle(ico.face_centroid(0), 2.0 * std::numbers::pi / 3.0)};
}

}  // namespace

std::vector<RotationElement> enumerate_group(Solid solid) {
  const int expected = solid == Solid::kCube ? 24 : 60;
  const auto [g1, g2] = generators(solid);

  std::vector<Mat3> elements = {Mat3::identity()};
  if (!contains(elements, g1)) elements.push_back(g1);
  if (!contains(elements, g2)) elements.push_back(g2);

  // Worklist closure under products. The order cap guards against bad
  // generators producing an unbounded set.
  const size_t cap = 4 * static_cast<size_t>(expected);
  size_t frontier = 0;
  while (frontier < elements.size()) {
    const Mat3 a = elements[frontier++];
    for (size_t j = 0; j < elements.size(); ++j) {
      for (const Mat3& p : {a * elements[j], elements[j] * a}) {
        if (!contains(elements, p)) {
          elements.push_back(p);
          if (elements.size() > cap)
            throw GeometryError(std::string("group closure for ") +
                                solid_name(solid) + " exceeded " +
                                std::to_string(cap) + " elements");
        }
      }
    }
  }

  if (elements.size() != static_cast<size_t>(expected))
    throw GeometryError(std::string("group closure for ") + solid_name(solid) +
                        " reached " + std::to_string(elements.size()) +
                        " elements, expected " + std::to_string(expected));

  std::sort(elements.begin(), elements.end(), [](const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a.m[i][j] != b.m[i][j]) return a.m[i][j] < b.m[i][j];
    return false;
  });

  std::vector<RotationElement> group(elements.size());
  for (size_t i = 0; i < elements.size(); ++i)
    group[i] = {elements[i], static_cast<int>(i)};
  return group;
}

namespace {

// Hash grid over quantized coordinates; cells are far coarser than the match
// tolerance and far finer than the point spacing, so a 27-cell probe finds
// any admissible match.
class PointIndex {
 public:
  explicit PointIndex(const std::vector<Vec3>& points) : points_(points) {
    cells_.reserve(points.size() * 2);
    for (size_t i = 0; i < points.size(); ++i)
      cells_[key(points[i])].push_back(static_cast<int>(i));
  }

  // Index of the nearest point within tol (chord), or -1.
  int find(const Vec3& p, double tol) const {
    const double tol_sq = tol * tol;
    int best = -1;
    double best_sq = tol_sq;
    const int64_t cx = coord(p.x), cy = coord(p.y), cz = coord(p.z);
    for (int64_t dx = -1; dx <= 1; ++dx)
      for (int64_t dy = -1; dy <= 1; ++dy)
        for (int64_t dz = -1; dz <= 1; ++dz) {
          const auto it = cells_.find(pack(cx + dx, cy + dy, cz + dz));
          if (it == cells_.end()) continue;
          for (int idx : it->second) {
            const double d = distance_sq(points_[idx], p);
            if (d <= best_sq) {
              best_sq = d;
              best = idx;
            }
          }
        }
    return best;
  }

 private:
  static constexpr double kCell = 1e-4;

  static int64_t coord(double v) {
    return static_cast<int64_t>(std::floor(v / kCell));
  }
  static uint64_t pack(int64_t x, int64_t y, int64_t z) {
    const uint64_t m = (1ull << 21) - 1;
    return ((static_cast<uint64_t>(x) & m) << 42) |
           ((static_cast<uint64_t>(y) & m) << 21) |
           (static_cast<uint64_t>(z) & m);
  }
  uint64_t key(const Vec3& p) const {
    return pack(coord(p.x), coord(p.y), coord(p.z));
  }

  const std::vector<Vec3>& points_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
};

}  // namespace

PermutationPair rotation_to_permutation(const RotationElement& rotation,
                                        const SamplingGrid& grid,
                                        double tol) {
  const int total = grid.num_points();
  const PointIndex index(grid.points);

  PermutationPair pair;
  pair.point_perm.assign(total, -1);
  std::vector<char> hit(total, 0);

  for (int m = 0; m < total; ++m) {
    const Vec3 rotated = rotation.matrix.apply(grid.points[m]);
    const int target = index.find(rotated, tol);
    if (target < 0)
      throw GeometryError("rotation id " + std::to_string(rotation.id) +
                          ": rotated point " + std::to_string(m) +
                          " matches no grid point within tolerance (grid " +
                          grid.param_string() + " is not symmetric)");
    if (hit[target])
      throw GeometryError("rotation id " + std::to_string(rotation.id) +
                          ": point matching is not a bijection on grid " +
                          grid.param_string());
    hit[target] = 1;
    pair.point_perm[m] = target;
  }

  const int d = grid.patch_size;
  pair.patch_perm.assign(grid.num_patches, -1);
  for (int j = 0; j < grid.num_patches; ++j) {
    const int target_patch = pair.point_perm[static_cast<size_t>(j) * d] / d;
    for (int s = 1; s < d; ++s)
      if (pair.point_perm[static_cast<size_t>(j) * d + s] / d != target_patch)
        throw GeometryError("rotation id " + std::to_string(rotation.id) +
                            ": patch " + std::to_string(j) +
                            " does not map into a single patch on grid " +
                            grid.param_string());
    pair.patch_perm[j] = target_patch;
  }

  pair.within_patch_aligned = true;
  for (int j = 0; j < grid.num_patches && pair.within_patch_aligned; ++j)
    for (int s = 0; s < d; ++s)
      if (pair.point_perm[static_cast<size_t>(j) * d + s] !=
          pair.patch_perm[j] * d + s) {
        pair.within_patch_aligned = false;
        break;
      }
  return pair;
}

Mat3 random_rotation(Rng& rng) {
  // Uniform unit quaternion -> Haar-uniform rotation.
  double q[4];
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double& c : q) {
      c = rng.normal();
      norm_sq += c * c;
    }
  } while (norm_sq < 1e-12);
  const double inv = 1.0 / std::sqrt(norm_sq);
  const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;

  Mat3 r;
  r.m[0][0] = 1 - 2 * (y * y + z * z);
  r.m[0][1] = 2 * (x * y - w * z);
  r.m[0][2] = 2 * (x * z + w * y);
  r.m[1][0] = 2 * (x * y + w * z);
  r.m[1][1] = 1 - 2 * (x * x + z * z);
  r.m[1][2] = 2 * (y * z - w * x);
  r.m[2][0] = 2 * (x * z - w * y);
  r.m[2][1] = 2 * (y * z + w * x);
  r.m[2][2] = 1 - 2 * (x * x + y * y);
  return r;
}

std::vector<int> compose_permutations(const std::vector<int>& first,
                                      const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

void write_permutation_csv(const std::vector<RotationElement>& group,
                           const SamplingGrid& grid, std::ostream& out) {
  out << "# sphtr-permutations v1 " << grid.param_string()
      << " group_order=" << group.size() << "\n";
  out << "rotation_id,patch_index,image_patch_index\n";
  for (const auto& rot : group) {
    const PermutationPair pair = rotation_to_permutation(rot, grid);
    for (int j = 0; j < grid.num_patches; ++j)
      out << rot.id << ',' << j << ',' << pair.patch_perm[j] << '\n';
  }
}

}  // namespace sphtr

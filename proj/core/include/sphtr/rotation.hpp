#pragma once

#include <ostream>
#include <vector>

#include "sphtr/grid.hpp"
#include "sphtr/rng.hpp"
#include "sphtr/vec3.hpp"

namespace sphtr {

enum class Solid { kCube, kIcosa };

const char* solid_name(Solid s);

// One proper rotation of a symmetry group. `id` is the element's index under
// the canonical ordering (flattened matrices sorted lexicographically), so
// permutation tables are reproducible across runs.
struct RotationElement {
  Mat3 matrix;
  int id = -1;
};

// A rotation reduced to permutations of a grid. Conventions:
//   point_perm[m] is where point m lands:  R * points[m] == points[point_perm[m]]
//   patch_perm[j] is where patch j lands as a block.
// within_patch_aligned is true iff point_perm(j*D + s) == patch_perm(j)*D + s
// for every patch j and slot s.
struct PermutationPair {
  std::vector<int> patch_perm;  // size N
  std::vector<int> point_perm;  // size N*D
  bool within_patch_aligned = false;
};

// Closure of two generators (order-5 vertex axis + order-3 face axis for the
// icosahedron; order-4 face axis + order-3 body diagonal for the cube).
// Throws GeometryError if closure does not stabilize at the expected order.
std::vector<RotationElement> enumerate_group(Solid solid);

// Matches R * points[m] against the grid by nearest point; every match must
// lie within `tol` (chord) and the result must be a bijection, otherwise the
// grid is not symmetric under R and a GeometryError is thrown.
PermutationPair rotation_to_permutation(const RotationElement& rotation,
                                        const SamplingGrid& grid,
                                        double tol = 1e-9);

// Haar-uniform rotation via a uniform unit quaternion.
Mat3 random_rotation(Rng& rng);

// Composition helper with the convention (a_then_b)[m] = b[a[m]].
std::vector<int> compose_permutations(const std::vector<int>& first,
                                      const std::vector<int>& then);

// CSV rows (rotation_id, patch_index, image_patch_index) for every group
// element on the given grid.
void write_permutation_csv(const std::vector<RotationElement>& group,
                           const SamplingGrid& grid, std::ostream& out);

}  // namespace sphtr

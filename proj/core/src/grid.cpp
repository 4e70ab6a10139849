#include "sphtr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sphtr/csv.hpp"
#include "sphtr/errors.hpp"

namespace sphtr {

const char* grid_method_name(GridMethod m) {
  switch (m) {
    case GridMethod::kErp:
      return "erp";
    case GridMethod::kCube:
      return "cube";
    case GridMethod::kIcosa:
      return "icosa";
  }
  return "?";
}

std::vector<std::span<const Vec3>> SamplingGrid::patch_view() const {
  std::vector<std::span<const Vec3>> view;
  view.reserve(num_patches);
  for (int j = 0; j < num_patches; ++j)
    view.emplace_back(points.data() + static_cast<size_t>(j) * patch_size,
                      static_cast<size_t>(patch_size));
  return view;
}

std::string SamplingGrid::param_string() const {
  std::ostringstream os;
  os << "method=" << grid_method_name(method);
  switch (method) {
    case GridMethod::kErp:
      os << " H=" << erp.height << " W=" << erp.width << " Ph=" << erp.patch_h
         << " Pw=" << erp.patch_w;
      break;
    case GridMethod::kCube:
      os << " e=" << cube.edge;
      break;
    case GridMethod::kIcosa:
      os << " div=" << icosa.div << " k=" << icosa.patch_scale;
      break;
  }
  return os.str();
}

SamplingGrid build_erp_grid(int height, int width, int patch_h, int patch_w) {
  if (height < 1 || width != 2 * height)
    throw ConfigError("erp grid requires W = 2H (aspect ratio 1/2), got H=" +
                      std::to_string(height) + " W=" + std::to_string(width));
  if (patch_h < 1 || patch_w < 1 || height % patch_h != 0 ||
      width % patch_w != 0)
    throw ConfigError("erp patch size must divide the grid: H=" +
                      std::to_string(height) + " W=" + std::to_string(width) +
                      " Ph=" + std::to_string(patch_h) +
                      " Pw=" + std::to_string(patch_w));

  const int patches_y = height / patch_h;
  const int patches_x = width / patch_w;

  SamplingGrid grid;
  grid.method = GridMethod::kErp;
  grid.erp = {height, width, patch_h, patch_w};
  grid.num_patches = patches_y * patches_x;
  grid.patch_size = patch_h * patch_w;
  grid.points.reserve(static_cast<size_t>(height) * width);

  // Pixel-center sampling keeps poles unsampled so all points stay distinct.
  for (int py = 0; py < patches_y; ++py) {
    for (int px = 0; px < patches_x; ++px) {
      for (int sy = 0; sy < patch_h; ++sy) {
        for (int sx = 0; sx < patch_w; ++sx) {
          const int row = py * patch_h + sy;
          const int col = px * patch_w + sx;
          const double theta = std::numbers::pi * (row + 0.5) / height;
          const double phi = 2.0 * std::numbers::pi * (col + 0.5) / width;
          const double st = std::sin(theta);
          grid.points.push_back(
              {st * std::cos(phi), st * std::sin(phi), std::cos(theta)});
        }
      }
    }
  }
  return grid;
}

SamplingGrid build_cube_grid(int edge) {
  if (edge < 1)
    throw ConfigError("cube grid requires e >= 1, got e=" +
                      std::to_string(edge));

  SamplingGrid grid;
  grid.method = GridMethod::kCube;
  grid.cube = {edge};
  grid.num_patches = 6;
  grid.patch_size = edge * edge;
  grid.points.reserve(6u * edge * edge);

  // Face order +X,-X,+Y,-Y,+Z,-Z; (u,v) through pixel centers, slots
  // row-major in (v, u).
  const auto face_dir = [](int face, double u, double v) -> Vec3 {
    switch (face) {
      case 0:
        return {1.0, u, v};
      case 1:
        return {-1.0, u, v};
      case 2:
        return {u, 1.0, v};
      case 3:
        return {u, -1.0, v};
      case 4:
        return {u, v, 1.0};
      default:
        return {u, v, -1.0};
    }
  };

  for (int face = 0; face < 6; ++face) {
    for (int iv = 0; iv < edge; ++iv) {
      const double v = 2.0 * (iv + 0.5) / edge - 1.0;
      for (int iu = 0; iu < edge; ++iu) {
        const double u = 2.0 * (iu + 0.5) / edge - 1.0;
        grid.points.push_back(normalized(face_dir(face, u, v)));
      }
    }
  }
  return grid;
}

namespace {

Icosahedron build_canonical_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      verts.push_back({a, b, 0.0});
      verts.push_back({0.0, a, b});
      verts.push_back({b, 0.0, a});
    }
  for (auto& v : verts) v = normalized(v);
  std::sort(verts.begin(), verts.end(), [](const Vec3& a, const Vec3& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });

  Icosahedron ico;
  std::copy(verts.begin(), verts.end(), ico.vertices.begin());

  // Edges connect vertices at the minimal pairwise distance.
  const double edge_sq = 4.0 / (1.0 + phi * phi);  // squared chord length
  const auto adjacent = [&](int i, int j) {
    return std::abs(distance_sq(ico.vertices[i], ico.vertices[j]) - edge_sq) <
           1e-9;
  };

  int n = 0;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k)
        if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k)) {
          std::array<int, 3> f = {i, j, k};
          // Outward winding: normal of (v0,v1,v2) points away from center.
          const Vec3 nrm = cross(ico.vertices[f[1]] - ico.vertices[f[0]],
                                 ico.vertices[f[2]] - ico.vertices[f[0]]);
          const Vec3 c =
              ico.vertices[f[0]] + ico.vertices[f[1]] + ico.vertices[f[2]];
          if (dot(nrm, c) < 0.0) std::swap(f[1], f[2]);
          ico.faces[n++] = f;
        }
  if (n != 20) throw GeometryError("icosahedron face enumeration failed");
  return ico;
}

// Depth-first subdivision; children in order corner-0, corner-1, corner-2,
// center. Descendants of any depth-k triangle are contiguous in the output,
// which is what makes patch_scale a pure regrouping.
void collect_samples(const Vec3& a, const Vec3& b, const Vec3& c, int depth,
                     std::vector<Vec3>& out) {
  if (depth == 0) {
    out.push_back(normalized((a + b + c) * (1.0 / 3.0)));
    return;
  }
  const Vec3 ab = (a + b) * 0.5;
  const Vec3 bc = (b + c) * 0.5;
  const Vec3 ca = (c + a) * 0.5;
  collect_samples(a, ab, ca, depth - 1, out);
  collect_samples(ab, b, bc, depth - 1, out);
  collect_samples(ca, bc, c, depth - 1, out);
  collect_samples(ab, bc, ca, depth - 1, out);
}

}  // namespace

const Icosahedron& canonical_icosahedron() {
  static const Icosahedron ico = build_canonical_icosahedron();
  return ico;
}

Vec3 Icosahedron::face_centroid(int f) const {
  const auto& face = faces[f];
  return normalized(
      (vertices[face[0]] + vertices[face[1]] + vertices[face[2]]) *
      (1.0 / 3.0));
}

SamplingGrid build_icosa_grid(int div, int patch_scale) {
  if (div < 0)
    throw ConfigError("icosa grid requires div >= 0, got div=" +
                      std::to_string(div));
  if (patch_scale < 0 || patch_scale > div)
    throw ConfigError("icosa patch scale must satisfy 0 <= k <= div, got k=" +
                      std::to_string(patch_scale) +
                      " div=" + std::to_string(div));

  SamplingGrid grid;
  grid.method = GridMethod::kIcosa;
  grid.icosa = {div, patch_scale};
  grid.num_patches = 20 << (2 * patch_scale);          // 20 * 4^k
  grid.patch_size = 1 << (2 * (div - patch_scale));    // 4^(div-k)
  grid.points.reserve(static_cast<size_t>(20) << (2 * div));

  const Icosahedron& ico = canonical_icosahedron();
  for (const auto& face : ico.faces)
    collect_samples(ico.vertices[face[0]], ico.vertices[face[1]],
                    ico.vertices[face[2]], div, grid.points);
  return grid;
}

void write_grid_csv(const SamplingGrid& grid, std::ostream& out) {
  out << "# sphtr-grid v1 " << grid.param_string()
      << " N=" << grid.num_patches << " D=" << grid.patch_size << "\n";
  out << "patch_index,slot_index,x,y,z\n";
  for (int j = 0; j < grid.num_patches; ++j) {
    for (int s = 0; s < grid.patch_size; ++s) {
      const Vec3& p = grid.point(j, s);
      out << j << ',' << s << ',' << format_double(p.x) << ','
          << format_double(p.y) << ',' << format_double(p.z) << '\n';
    }
  }
}

}  // namespace sphtr

#include "brickplan/voxelize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "brickplan/errors.hpp"

namespace brickplan {

namespace {

constexpr double kTouchEps = 1e-9;

// One separating-axis check: project the triangle verts onto `axis` and
// compare against the box projection radius.
bool axis_separates(const Vec3& axis, const Vec3& v0, const Vec3& v1, const Vec3& v2,
                    const Vec3& half) {
    double p0 = dot(axis, v0);
    double p1 = dot(axis, v1);
    double p2 = dot(axis, v2);
    double r = half.x * std::abs(axis.x) + half.y * std::abs(axis.y) + half.z * std::abs(axis.z);
    double lo = std::min({p0, p1, p2});
    double hi = std::max({p0, p1, p2});
    return lo > r + kTouchEps || hi < -r - kTouchEps;
}

}  // namespace

bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half, const Vec3& a,
                          const Vec3& b, const Vec3& c) {
    const Vec3 v0 = a - box_center;
    const Vec3 v1 = b - box_center;
    const Vec3 v2 = c - box_center;

    // Box face normals.
    double lo = std::min({v0.x, v1.x, v2.x}), hi = std::max({v0.x, v1.x, v2.x});
    if (lo > box_half.x + kTouchEps || hi < -box_half.x - kTouchEps) return false;
    lo = std::min({v0.y, v1.y, v2.y});
    hi = std::max({v0.y, v1.y, v2.y});
    if (lo > box_half.y + kTouchEps || hi < -box_half.y - kTouchEps) return false;
    lo = std::min({v0.z, v1.z, v2.z});
    hi = std::max({v0.z, v1.z, v2.z});
    if (lo > box_half.z + kTouchEps || hi < -box_half.z - kTouchEps) return false;

    // Triangle plane.
    const Vec3 e0 = v1 - v0;
    const Vec3 e1 = v2 - v1;
    const Vec3 e2 = v0 - v2;
    const Vec3 n = cross(e0, e1);
    double d = dot(n, v0);
    double r = box_half.x * std::abs(n.x) + box_half.y * std::abs(n.y) + box_half.z * std::abs(n.z);
    if (std::abs(d) > r + kTouchEps) return false;

    // Nine cross-product axes.
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec3& u : axes) {
        if (axis_separates(cross(u, e0), v0, v1, v2, box_half)) return false;
        if (axis_separates(cross(u, e1), v0, v1, v2, box_half)) return false;
        if (axis_separates(cross(u, e2), v0, v1, v2, box_half)) return false;
    }
    return true;
}

TriangleMesh scale_to_grid(const TriangleMesh& mesh, int target_max_dim, int dims_out[3]) {
    if (target_max_dim < 1) throw ValidationError("target_max_dim must be >= 1");
    Aabb box = bounding_box(mesh);
    const Vec3 extent = box.max - box.min;
    const double longest = std::max({extent.x, extent.y, extent.z});
    if (longest <= 0.0) {
        throw ValidationError("degenerate mesh: bounding box has zero extent on all axes");
    }
    const double s = static_cast<double>(target_max_dim) / longest;
    for (int i = 0; i < 3; ++i) {
        dims_out[i] = std::max(1, static_cast<int>(std::ceil(extent[i] * s - 1e-9)));
    }
    TriangleMesh scaled = mesh;
    for (Vec3& v : scaled.vertices) v = (v - box.min) * s;
    return scaled;
}

namespace {

// Marks cells overlapped by one triangle into `occ` (raw pointer so the
// parallel backend can hand in per-thread buffers).
void rasterize_triangle(const TriangleMesh& mesh, std::size_t t, const VoxelGrid& grid,
                        std::uint8_t* occ) {
    const Vec3& a = mesh.vertices[mesh.triangles[t][0]];
    const Vec3& b = mesh.vertices[mesh.triangles[t][1]];
    const Vec3& c = mesh.vertices[mesh.triangles[t][2]];

    const double min_x = std::min({a.x, b.x, c.x}), max_x = std::max({a.x, b.x, c.x});
    const double min_y = std::min({a.y, b.y, c.y}), max_y = std::max({a.y, b.y, c.y});
    const double min_z = std::min({a.z, b.z, c.z}), max_z = std::max({a.z, b.z, c.z});

    const int x0 = std::clamp(static_cast<int>(std::floor(min_x - kTouchEps)), 0, grid.nx() - 1);
    const int x1 = std::clamp(static_cast<int>(std::floor(max_x + kTouchEps)), 0, grid.nx() - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(min_y - kTouchEps)), 0, grid.ny() - 1);
    const int y1 = std::clamp(static_cast<int>(std::floor(max_y + kTouchEps)), 0, grid.ny() - 1);
    const int z0 = std::clamp(static_cast<int>(std::floor(min_z - kTouchEps)), 0, grid.nz() - 1);
    const int z1 = std::clamp(static_cast<int>(std::floor(max_z + kTouchEps)), 0, grid.nz() - 1);

    const Vec3 half{0.5, 0.5, 0.5};
    for (int z = z0; z <= z1; ++z) {
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                std::size_t idx = grid.index(x, y, z);
                if (occ[idx]) continue;
                const Vec3 center{x + 0.5, y + 0.5, z + 0.5};
                if (triangle_box_overlap(center, half, a, b, c)) occ[idx] = 1;
            }
        }
    }
}

}  // namespace

void mark_surface_serial(const TriangleMesh& scaled, VoxelGrid& grid) {
    std::vector<std::uint8_t> occ(grid.cell_count(), 0);
    for (std::size_t t = 0; t < scaled.triangles.size(); ++t) {
        rasterize_triangle(scaled, t, grid, occ.data());
    }
    for (int z = 0; z < grid.nz(); ++z)
        for (int y = 0; y < grid.ny(); ++y)
            for (int x = 0; x < grid.nx(); ++x)
                if (occ[grid.index(x, y, z)]) grid.set(x, y, z, true);
}

void mark_surface_parallel(const TriangleMesh& scaled, VoxelGrid& grid) {
#ifdef _OPENMP
    const std::size_t n = grid.cell_count();
    const int max_threads = omp_get_max_threads();
    std::vector<std::vector<std::uint8_t>> locals(max_threads);

#pragma omp parallel
    {
        std::vector<std::uint8_t>& occ = locals[omp_get_thread_num()];
        occ.assign(n, 0);
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(scaled.triangles.size()); ++t) {
            rasterize_triangle(scaled, static_cast<std::size_t>(t), grid, occ.data());
        }
    }

    for (int z = 0; z < grid.nz(); ++z)
        for (int y = 0; y < grid.ny(); ++y)
            for (int x = 0; x < grid.nx(); ++x) {
                std::size_t idx = grid.index(x, y, z);
                for (const auto& occ : locals) {
                    if (!occ.empty() && occ[idx]) {
                        grid.set(x, y, z, true);
                        break;
                    }
                }
            }
#else
    mark_surface_serial(scaled, grid);
#endif
}

void fill_interior(VoxelGrid& grid) {
    const int nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
    std::vector<std::uint8_t> outside(grid.cell_count(), 0);
    std::vector<std::array<int, 3>> queue;

    auto try_seed = [&](int x, int y, int z) {
        std::size_t idx = grid.index(x, y, z);
        if (!grid.at(x, y, z) && !outside[idx]) {
            outside[idx] = 1;
            queue.push_back({x, y, z});
        }
    };
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x)
                if (x == 0 || y == 0 || z == 0 || x == nx - 1 || y == ny - 1 || z == nz - 1)
                    try_seed(x, y, z);

    static constexpr int kDirs[6][3] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                        {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    while (!queue.empty()) {
        auto [x, y, z] = queue.back();
        queue.pop_back();
        for (const auto& d : kDirs) {
            int px = x + d[0], py = y + d[1], pz = z + d[2];
            if (grid.in_bounds(px, py, pz)) try_seed(px, py, pz);
        }
    }

    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x)
                if (!grid.at(x, y, z) && !outside[grid.index(x, y, z)]) grid.set(x, y, z, true);
}

VoxelGrid voxelize(const TriangleMesh& mesh, int target_max_dim, VoxelizeBackend backend) {
    if (mesh.triangles.empty()) throw ValidationError("cannot voxelize an empty mesh");
    int dims[3];
    TriangleMesh scaled = scale_to_grid(mesh, target_max_dim, dims);
    VoxelGrid grid(dims[0], dims[1], dims[2]);
    if (backend == VoxelizeBackend::Serial) {
        mark_surface_serial(scaled, grid);
    } else {
        mark_surface_parallel(scaled, grid);
    }
    fill_interior(grid);
    return grid;
}

}  // namespace brickplan

#pragma once

#include "brickplan/geometry.hpp"
#include "brickplan/voxel_grid.hpp"

namespace brickplan {

enum class VoxelizeBackend {
    Serial,    // reference implementation, single thread
    Parallel,  // OpenMP over triangles, per-thread occupancy merged afterwards
};

// Scales the mesh so its longest bounding-box axis spans target_max_dim
// cells, marks every cell whose box overlaps a triangle, then fills the
// interior: cells a flood fill from outside the grid cannot reach are
// occupied. Leaky meshes therefore still come out solid.
//
// Both backends produce bit-identical grids; marking is idempotent so the
// merge order of the parallel backend does not matter.
VoxelGrid voxelize(const TriangleMesh& mesh, int target_max_dim,
                   VoxelizeBackend backend = VoxelizeBackend::Parallel);

// Surface pass only, exposed for the serial/parallel equivalence tests and
// the benchmark. `scaled` must already live in grid coordinates
// ([0, nx] x [0, ny] x [0, nz]).
void mark_surface_serial(const TriangleMesh& scaled, VoxelGrid& grid);
void mark_surface_parallel(const TriangleMesh& scaled, VoxelGrid& grid);

// Translates/scales mesh into the grid coordinate frame for target_max_dim
// and reports the grid dimensions. Throws ValidationError if the mesh has
// zero extent on every axis.
TriangleMesh scale_to_grid(const TriangleMesh& mesh, int target_max_dim, int dims_out[3]);

// Marks every unoccupied cell unreachable from outside the grid as occupied
// (6-connectivity).
void fill_interior(VoxelGrid& grid);

// True when the triangle intersects the axis-aligned box (touching counts).
bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half, const Vec3& a,
                          const Vec3& b, const Vec3& c);

}  // namespace brickplan

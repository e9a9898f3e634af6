#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "brickplan/bricks.hpp"
#include "brickplan/voxel_grid.hpp"

namespace brickplan {

// Every placement whose footprint lies entirely on occupied cells, one entry
// per distinct footprint (square kinds appear with Axis::X only), in
// canonical order.
std::vector<Placement> enumerate_placements(const VoxelGrid& grid, const Inventory& inv);

// Rows are placements, columns are occupied voxels in (z, y, x) scan order;
// entry (b, v) is 1 iff placement b's footprint contains voxel v. Stored
// sparsely as per-row column lists.
struct CoverageMatrix {
    std::size_t voxel_count = 0;
    std::vector<std::vector<int>> rows;  // rows[b] = sorted voxel ids covered by b

    bool entry(std::size_t b, int v) const;
};

// Throws ValidationError if a placement sticks out of the grid.
CoverageMatrix coverage(const std::vector<Placement>& placements, const VoxelGrid& grid);

// Result of checking the exact-partition condition: every occupied voxel
// covered exactly once, nothing covering empty space.
struct PartitionReport {
    std::vector<std::array<int, 3>> uncovered;
    std::vector<std::array<int, 3>> multiply_covered;
    std::vector<std::array<int, 3>> overhanging;  // footprint cells that are not occupied voxels

    bool ok() const { return uncovered.empty() && multiply_covered.empty() && overhanging.empty(); }
    std::string summary() const;
};

PartitionReport validate_partition(const std::vector<Placement>& placements, const VoxelGrid& grid);

}  // namespace brickplan

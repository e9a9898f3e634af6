#pragma once

#include <cstdint>
#include <vector>

#include "brickplan/bricks.hpp"
#include "brickplan/coverage.hpp"
#include "brickplan/voxel_grid.hpp"

namespace brickplan {

// Minimum number of pieces from `lengths` summing exactly to L, with a
// witness multiset (descending). Exact dynamic program over 0..L; this is
// the one-constraint integer program the strip stage leans on.
struct LpIntResult {
    int count = 0;
    std::vector<int> pieces;
};

LpIntResult lp_int(int length, const std::vector<int>& lengths);

struct ExactOptions {
    std::size_t cell_cap = 512;          // refuse instances with more occupied cells
    std::uint64_t node_budget = 50'000'000;
};

struct ExactResult {
    std::vector<Placement> placements;
    bool optimal = true;    // false when the node budget ran out first
    std::uint64_t nodes = 0;
};

// Minimum-cardinality exact cover of the occupied cells by inventory
// placements. Branch and bound on the first uncovered voxel in (z, y, x)
// order; since bricks never span layers the search completes one layer at a
// time. Among optimal solutions the lexicographically smallest placement
// list (by z, y, x, kind index, axis) is returned so outputs are stable.
//
// Throws InstanceTooLarge when occupied count exceeds options.cell_cap.
ExactResult solve_exact(const VoxelGrid& grid, const Inventory& inv,
                        const ExactOptions& options = {});

}  // namespace brickplan

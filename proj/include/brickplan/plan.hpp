#pragma once

#include <array>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brickplan/bricks.hpp"
#include "brickplan/voxel_grid.hpp"

namespace brickplan {

// One instruction step: all bricks of one layer, bottom-up.
struct BuildStep {
    int index = 0;  // 1-based
    int layer = 0;
    std::vector<Placement> new_placements;
};

struct BuildPlan {
    std::array<int, 3> grid_dims{0, 0, 0};
    std::vector<std::pair<BrickKind, int>> inventory_counts;  // used kinds, (width, length) asc
    std::vector<BuildStep> steps;

    std::size_t total_bricks() const;
    // Everything placed in steps 1..k, in step order.
    std::vector<Placement> cumulative_through(int step_index) const;
};

// Groups a validated build list into per-layer steps. Throws ValidationError
// (with the partition report) if the placements are not an exact partition
// of the grid.
BuildPlan make_plan(const std::vector<Placement>& build_list, const VoxelGrid& grid);

// Schema:
// {grid_dims, inventory: [{width, length, count}], steps: [{index, layer,
//  placements: [{x, y, z, axis, width, length}]}]}
// Export then import then export is byte-identical.
nlohmann::json export_plan(const BuildPlan& plan);
BuildPlan import_plan(const nlohmann::json& j);

}  // namespace brickplan

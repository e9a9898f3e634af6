#include "brickplan/voxel_grid.hpp"

#include <algorithm>

#include "brickplan/errors.hpp"

namespace brickplan {

VoxelGrid::VoxelGrid(int nx, int ny, int nz) : nx_(nx), ny_(ny), nz_(nz) {
    if (nx < 1 || ny < 1 || nz < 1) {
        throw ValidationError("grid dims must all be >= 1");
    }
    occ_.assign(static_cast<std::size_t>(nx) * ny * nz, 0);
}

std::size_t VoxelGrid::occupied_count() const {
    return static_cast<std::size_t>(std::count(occ_.begin(), occ_.end(), 1));
}

std::vector<std::array<int, 3>> VoxelGrid::occupied_cells() const {
    std::vector<std::array<int, 3>> cells;
    cells.reserve(occupied_count());
    for (int z = 0; z < nz_; ++z)
        for (int y = 0; y < ny_; ++y)
            for (int x = 0; x < nx_; ++x)
                if (at(x, y, z)) cells.push_back({x, y, z});
    return cells;
}

nlohmann::json VoxelGrid::to_json() const {
    nlohmann::json j;
    j["dims"] = {nx_, ny_, nz_};
    nlohmann::json occ = nlohmann::json::array();
    for (const auto& c : occupied_cells()) occ.push_back({c[0], c[1], c[2]});
    j["occupied"] = std::move(occ);
    return j;
}

VoxelGrid VoxelGrid::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("occupied")) {
        throw ParseError("voxel grid JSON needs 'dims' and 'occupied'");
    }
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 3) {
        throw ParseError("'dims' must be [nx, ny, nz]");
    }
    VoxelGrid grid(dims.at(0).get<int>(), dims.at(1).get<int>(), dims.at(2).get<int>());
    for (const auto& cell : j.at("occupied")) {
        if (!cell.is_array() || cell.size() != 3) throw ParseError("occupied entry must be [x, y, z]");
        int x = cell.at(0).get<int>(), y = cell.at(1).get<int>(), z = cell.at(2).get<int>();
        if (!grid.in_bounds(x, y, z)) {
            throw ParseError("occupied cell out of bounds");
        }
        grid.set(x, y, z, true);
    }
    return grid;
}

}  // namespace brickplan

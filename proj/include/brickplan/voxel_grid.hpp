#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

namespace brickplan {

// Dense 3D occupancy grid of unit cells. Iterating occupied cells in
// (z, y, x) scan order enumerates the voxel set exactly once; that order is
// the canonical voxel numbering used everywhere downstream.
class VoxelGrid {
public:
    VoxelGrid() = default;
    VoxelGrid(int nx, int ny, int nz);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && y >= 0 && z >= 0 && x < nx_ && y < ny_ && z < nz_;
    }

    bool at(int x, int y, int z) const { return occ_[index(x, y, z)] != 0; }
    void set(int x, int y, int z, bool v) { occ_[index(x, y, z)] = v ? 1 : 0; }

    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny_ + y) * nx_ + x;
    }

    std::size_t cell_count() const { return occ_.size(); }
    std::size_t occupied_count() const;

    // Occupied cells in (z, y, x) scan order.
    std::vector<std::array<int, 3>> occupied_cells() const;

    nlohmann::json to_json() const;
    static VoxelGrid from_json(const nlohmann::json& j);

    bool operator==(const VoxelGrid&) const = default;

private:
    int nx_ = 0;
    int ny_ = 0;
    int nz_ = 0;
    std::vector<std::uint8_t> occ_;
};

}  // namespace brickplan

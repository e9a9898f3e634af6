#include "brickplan/coverage.hpp"

#include <algorithm>
#include <tuple>

#include "brickplan/errors.hpp"

namespace brickplan {

std::vector<Placement> enumerate_placements(const VoxelGrid& grid, const Inventory& inv) {
    std::vector<Placement> out;
    auto fits = [&](const Placement& p) {
        if (p.x < 0 || p.y < 0 || p.x + p.extent_x() > grid.nx() || p.y + p.extent_y() > grid.ny())
            return false;
        bool all = true;
        p.for_each_cell([&](int x, int y, int z) { all = all && grid.at(x, y, z); });
        return all;
    };
    for (int z = 0; z < grid.nz(); ++z) {
        for (const BrickKind& kind : inv.kinds()) {
            for (Axis axis : {Axis::X, Axis::Y}) {
                if (kind.square() && axis == Axis::Y) continue;
                Placement p{kind, 0, 0, z, axis};
                for (p.y = 0; p.y + p.extent_y() <= grid.ny(); ++p.y) {
                    for (p.x = 0; p.x + p.extent_x() <= grid.nx(); ++p.x) {
                        if (fits(p)) out.push_back(p);
                    }
                }
            }
        }
    }
    sort_placements(out, inv);
    return out;
}

bool CoverageMatrix::entry(std::size_t b, int v) const {
    const auto& row = rows.at(b);
    return std::binary_search(row.begin(), row.end(), v);
}

CoverageMatrix coverage(const std::vector<Placement>& placements, const VoxelGrid& grid) {
    // Voxel ids follow the canonical (z, y, x) scan order.
    std::vector<int> voxel_id(grid.cell_count(), -1);
    int next = 0;
    for (const auto& c : grid.occupied_cells()) voxel_id[grid.index(c[0], c[1], c[2])] = next++;

    CoverageMatrix m;
    m.voxel_count = static_cast<std::size_t>(next);
    m.rows.reserve(placements.size());
    for (const Placement& p : placements) {
        if (p.x < 0 || p.y < 0 || p.z < 0 || p.z >= grid.nz() || p.x + p.extent_x() > grid.nx() ||
            p.y + p.extent_y() > grid.ny()) {
            throw ValidationError("placement footprint outside grid");
        }
        std::vector<int> row;
        p.for_each_cell([&](int x, int y, int z) {
            int id = voxel_id[grid.index(x, y, z)];
            if (id >= 0) row.push_back(id);
        });
        std::sort(row.begin(), row.end());
        m.rows.push_back(std::move(row));
    }
    return m;
}

PartitionReport validate_partition(const std::vector<Placement>& placements,
                                   const VoxelGrid& grid) {
    PartitionReport report;
    std::vector<int> cover_count(grid.cell_count(), 0);
    for (const Placement& p : placements) {
        p.for_each_cell([&](int x, int y, int z) {
            if (!grid.in_bounds(x, y, z) || !grid.at(x, y, z)) {
                report.overhanging.push_back({x, y, z});
            } else {
                ++cover_count[grid.index(x, y, z)];
            }
        });
    }
    for (int z = 0; z < grid.nz(); ++z)
        for (int y = 0; y < grid.ny(); ++y)
            for (int x = 0; x < grid.nx(); ++x) {
                if (!grid.at(x, y, z)) continue;
                int n = cover_count[grid.index(x, y, z)];
                if (n == 0) report.uncovered.push_back({x, y, z});
                if (n > 1) report.multiply_covered.push_back({x, y, z});
            }
    std::sort(report.overhanging.begin(), report.overhanging.end(),
              [](const auto& a, const auto& b) {
                  return std::tuple(a[2], a[1], a[0]) < std::tuple(b[2], b[1], b[0]);
              });
    return report;
}

std::string PartitionReport::summary() const {
    auto cells = [](const std::vector<std::array<int, 3>>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size() && i < 16; ++i) {
            s += " (" + std::to_string(v[i][0]) + "," + std::to_string(v[i][1]) + "," +
                 std::to_string(v[i][2]) + ")";
        }
        if (v.size() > 16) s += " ...";
        return s;
    };
    if (ok()) return "exact partition: every occupied voxel covered exactly once";
    std::string s;
    if (!uncovered.empty())
        s += "uncovered voxels: " + std::to_string(uncovered.size()) + cells(uncovered) + "\n";
    if (!multiply_covered.empty())
        s += "multiply covered voxels: " + std::to_string(multiply_covered.size()) +
             cells(multiply_covered) + "\n";
    if (!overhanging.empty())
        s += "placements overhang empty cells: " + std::to_string(overhanging.size()) +
             cells(overhanging) + "\n";
    return s;
}

}  // namespace brickplan

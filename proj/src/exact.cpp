#include "brickplan/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "brickplan/errors.hpp"

namespace brickplan {

LpIntResult lp_int(int length, const std::vector<int>& lengths) {
    if (length < 0) throw ValidationError("lp_int: length must be >= 0");
    if (lengths.empty()) throw ValidationError("lp_int: no piece lengths given");

    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> best(length + 1, kInf);
    std::vector<int> take(length + 1, -1);
    best[0] = 0;
    for (int v = 1; v <= length; ++v) {
        for (int l : lengths) {
            if (l <= 0 || l > v) continue;
            if (best[v - l] + 1 < best[v]) {
                best[v] = best[v - l] + 1;
                take[v] = l;
            }
        }
    }
    if (best[length] >= kInf) {
        throw ValidationError("lp_int: length " + std::to_string(length) +
                              " cannot be composed from the given lengths");
    }
    LpIntResult r;
    r.count = best[length];
    for (int v = length; v > 0; v -= take[v]) r.pieces.push_back(take[v]);
    std::sort(r.pieces.rbegin(), r.pieces.rend());
    return r;
}

namespace {

// One layer of the set-partitioning search. Cells are the layer's occupied
// cells in (y, x) order; cands[c] lists placements covering cell c.
struct LayerSearch {
    const std::vector<Placement>* placements = nullptr;
    std::vector<std::vector<int>> rows;        // placement -> covered cell ids
    std::vector<std::vector<int>> cands;       // cell -> placements covering it
    int n_cells = 0;
    int max_area = 1;

    std::uint64_t nodes = 0;
    std::uint64_t node_budget = 0;
    bool budget_hit = false;

    std::vector<int> cover_count;
    std::vector<int> chosen;
    std::vector<int> best_sel;
    int best = std::numeric_limits<int>::max();

    bool place(int b, int delta) {
        for (int c : rows[b]) {
            cover_count[c] += delta;
            if (delta > 0 && cover_count[c] > 1) {
                // roll back the partial application
                for (int c2 : rows[b]) {
                    if (c2 == c) break;
                    cover_count[c2] -= delta;
                }
                cover_count[c] -= delta;
                return false;
            }
        }
        return true;
    }

    // Pass 1: find the optimum value. Candidate order is by descending area
    // so good incumbents appear early and the area bound bites.
    void search_value(int covered, int used, int first_unc) {
        while (first_unc < n_cells && cover_count[first_unc]) ++first_unc;
        if (first_unc == n_cells) {
            if (used < best) {
                best = used;
                best_sel = chosen;
            }
            return;
        }
        int lb = used + (n_cells - covered + max_area - 1) / max_area;
        if (lb >= best) return;
        if (budget_hit && best != std::numeric_limits<int>::max()) return;
        for (int b : cands[first_unc]) {
            if (++nodes > node_budget) budget_hit = true;
            if (!place(b, +1)) continue;
            chosen.push_back(b);
            search_value(covered + static_cast<int>(rows[b].size()), used + 1, first_unc);
            chosen.pop_back();
            place(b, -1);
            if (budget_hit && best != std::numeric_limits<int>::max()) return;
        }
    }

    // Pass 2: re-walk with candidates in lexicographic order and a tight
    // bound; the first complete solution is the lexicographically smallest
    // optimal one.
    bool search_lex(int covered, int used, int first_unc, const std::vector<std::vector<int>>& lex) {
        while (first_unc < n_cells && cover_count[first_unc]) ++first_unc;
        if (first_unc == n_cells) {
            best_sel = chosen;
            return true;
        }
        int lb = used + (n_cells - covered + max_area - 1) / max_area;
        if (lb > best) return false;
        for (int b : lex[first_unc]) {
            if (++nodes > node_budget) return false;
            if (!place(b, +1)) continue;
            chosen.push_back(b);
            if (search_lex(covered + static_cast<int>(rows[b].size()), used + 1, first_unc, lex))
                return true;
            chosen.pop_back();
            place(b, -1);
        }
        return false;
    }
};

}  // namespace

ExactResult solve_exact(const VoxelGrid& grid, const Inventory& inv, const ExactOptions& options) {
    const std::size_t occupied = grid.occupied_count();
    if (occupied > options.cell_cap) {
        throw InstanceTooLarge("instance has " + std::to_string(occupied) +
                               " occupied cells, exact cap is " + std::to_string(options.cell_cap));
    }

    ExactResult result;
    if (occupied == 0) return result;

    const std::vector<Placement> all = enumerate_placements(grid, inv);
    std::uint64_t nodes_used = 0;

    for (int z = 0; z < grid.nz(); ++z) {
        // Layer-local cell ids in (y, x) order.
        std::vector<int> cell_id(static_cast<std::size_t>(grid.nx()) * grid.ny(), -1);
        int n_cells = 0;
        for (int y = 0; y < grid.ny(); ++y)
            for (int x = 0; x < grid.nx(); ++x)
                if (grid.at(x, y, z)) cell_id[static_cast<std::size_t>(y) * grid.nx() + x] = n_cells++;
        if (n_cells == 0) continue;

        std::vector<Placement> layer_pl;
        for (const Placement& p : all)
            if (p.z == z) layer_pl.push_back(p);

        LayerSearch s;
        s.placements = &layer_pl;
        s.n_cells = n_cells;
        s.node_budget = options.node_budget - std::min(options.node_budget, nodes_used);
        s.cover_count.assign(n_cells, 0);
        s.rows.resize(layer_pl.size());
        s.cands.resize(n_cells);
        for (std::size_t b = 0; b < layer_pl.size(); ++b) {
            layer_pl[b].for_each_cell([&](int x, int y, int) {
                int c = cell_id[static_cast<std::size_t>(y) * grid.nx() + x];
                s.rows[b].push_back(c);
            });
            std::sort(s.rows[b].begin(), s.rows[b].end());
            for (int c : s.rows[b]) s.cands[c].push_back(b);
            s.max_area = std::max(s.max_area, layer_pl[b].kind.area());
        }

        // layer_pl is already in lexicographic (canonical) order, so the raw
        // cands lists serve pass 2; pass 1 reorders by area.
        std::vector<std::vector<int>> lex_cands = s.cands;
        for (auto& list : s.cands) {
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
                return layer_pl[a].kind.area() > layer_pl[b].kind.area();
            });
        }

        s.search_value(0, 0, 0);
        bool layer_optimal = !s.budget_hit;
        if (layer_optimal) {
            std::fill(s.cover_count.begin(), s.cover_count.end(), 0);
            s.chosen.clear();
            std::vector<int> value_sel = s.best_sel;
            if (!s.search_lex(0, 0, 0, lex_cands)) {
                s.best_sel = value_sel;  // budget ran out mid-tie-break; keep the optimum we have
            }
        }

        for (int b : s.best_sel) result.placements.push_back(layer_pl[b]);
        result.optimal = result.optimal && layer_optimal;
        nodes_used += s.nodes;
        if (!layer_optimal) {
            // Budget exhausted: cover whatever later layers remain with 1x1s
            // so the result is still a valid partition, flagged non-optimal.
            PartitionReport rep = validate_partition(result.placements, grid);
            for (const auto& c : rep.uncovered) {
                result.placements.push_back(Placement{{1, 1}, c[0], c[1], c[2], Axis::X});
            }
            break;
        }
    }

    result.nodes = nodes_used;
    sort_placements(result.placements, inv);
    return result;
}

}  // namespace brickplan

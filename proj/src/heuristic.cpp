#include "brickplan/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "brickplan/errors.hpp"
#include "brickplan/exact.hpp"

namespace brickplan {

namespace {

Axis layer_axis(LayerAxisRule rule, int z) {
    switch (rule) {
        case LayerAxisRule::AlternateXY: return z % 2 == 0 ? Axis::X : Axis::Y;
        case LayerAxisRule::AlternateYX: return z % 2 == 0 ? Axis::Y : Axis::X;
        case LayerAxisRule::AlwaysX: return Axis::X;
        case LayerAxisRule::AlwaysY: return Axis::Y;
    }
    return Axis::X;
}

double interval_distance(int c, int lo, int hi) {
    if (c < lo) return lo - c;
    if (c > hi) return c - hi;
    return 0.0;
}

void check_params(const CostParams& p) {
    if (p.rho < 0) throw ValidationError("rho must be >= 0");
    if (p.gamma1 < 0) throw ValidationError("gamma1 must be >= 0");
    if (p.gamma2 <= 0) throw ValidationError("gamma2 must be > 0");
    if (p.epsilon_scale < 0) throw ValidationError("epsilon_scale must be >= 0");
}

}  // namespace

void GapSet::add(const Gap& g) {
    gaps_.push_back(g);
    by_cross_[{g.z, static_cast<int>(g.axis), g.cross}].push_back(g.coord);
    by_coord_[{g.z, static_cast<int>(g.axis), g.coord}].push_back(g.cross);
}

double GapSet::min_border_distance(const Strip& strip, int border_coord) const {
    double best = std::numeric_limits<double>::infinity();
    const int a = static_cast<int>(strip.axis);

    // Immediately adjacent parallel strips of the same layer.
    for (int cross : {strip.cross - 1, strip.cross + 1}) {
        if (auto it = by_cross_.find({strip.z, a, cross}); it != by_cross_.end()) {
            for (int c : it->second) best = std::min(best, std::abs(double(border_coord - c)));
        }
    }

    // Layer directly below: parallel gaps under the strip's own band...
    if (auto it = by_cross_.find({strip.z - 1, a, strip.cross}); it != by_cross_.end()) {
        for (int c : it->second) best = std::min(best, std::abs(double(border_coord - c)));
    }
    // ...and orthogonal gaps whose border segment lies under the band. Their
    // extent along our axis is the unit interval [cross, cross+1].
    const int other = 1 - a;
    for (int q : {strip.cross, strip.cross + 1}) {
        if (auto it = by_coord_.find({strip.z - 1, other, q}); it != by_coord_.end()) {
            for (int r : it->second) best = std::min(best, interval_distance(border_coord, r, r + 1));
        }
    }
    return best;
}

std::size_t count_aligned_gap_pairs(const GapSet& gaps) {
    std::map<int, std::vector<Gap>> by_layer;
    for (const Gap& g : gaps.all()) by_layer[g.z].push_back(g);

    std::size_t pairs = 0;
    for (const auto& [z, lower] : by_layer) {
        auto it = by_layer.find(z + 1);
        if (it == by_layer.end()) continue;
        for (const Gap& g1 : lower) {
            for (const Gap& g2 : it->second) {
                if (g1.axis == g2.axis) {
                    if (g1.coord == g2.coord && g1.cross == g2.cross) ++pairs;
                } else {
                    // Orthogonal unit segments touch iff each one's plane
                    // coordinate falls inside the other's span.
                    if (g1.coord >= g2.cross && g1.coord <= g2.cross + 1 && g2.coord >= g1.cross &&
                        g2.coord <= g1.cross + 1) {
                        ++pairs;
                    }
                }
            }
        }
    }
    return pairs;
}

double multiplicity(int l_b, int l0) {
    if (l_b < 1) throw ValidationError("multiplicity: brick length must be >= 1");
    if (l0 < l_b) throw ValidationError("multiplicity: l0 must be >= brick length");
    return static_cast<double>(l0) / static_cast<double>(l_b);
}

int remainder_count(int remaining, int l0, int rho, const std::vector<int>& lengths) {
    if (remaining < 0) throw ValidationError("remainder_count: remaining length must be >= 0");
    if (remaining >= rho) {
        int bulk = (remaining - rho + l0 - 1) / l0;  // ceil((L - rho) / l0)
        return bulk + lp_int(rho, lengths).count;
    }
    return lp_int(remaining, lengths).count;
}

double gap_penalty(const GapSet& gaps, const Strip& strip, int border_coord, double gamma1,
                   double gamma2) {
    if (gamma1 == 0.0 || gaps.empty()) return 0.0;
    double d = gaps.min_border_distance(strip, border_coord);
    if (!std::isfinite(d)) return 0.0;
    return gamma1 * std::exp(-gamma2 * d);
}

std::vector<Strip> segment(const VoxelGrid& grid, LayerAxisRule rule) {
    std::vector<Strip> strips;
    for (int z = 0; z < grid.nz(); ++z) {
        const Axis axis = layer_axis(rule, z);
        const int n_cross = axis == Axis::X ? grid.ny() : grid.nx();
        const int n_along = axis == Axis::X ? grid.nx() : grid.ny();
        auto occupied = [&](int along, int cross) {
            return axis == Axis::X ? grid.at(along, cross, z) : grid.at(cross, along, z);
        };
        for (int cross = 0; cross < n_cross; ++cross) {
            int along = 0;
            while (along < n_along) {
                if (!occupied(along, cross)) {
                    ++along;
                    continue;
                }
                int start = along;
                while (along < n_along && occupied(along, cross)) ++along;
                strips.push_back({z, axis, cross, start, along - start});
            }
        }
    }
    return strips;
}

std::vector<Placement> place_strip(const Strip& strip, const Inventory& inv, GapSet& gaps,
                                   const CostParams& params, Rng& rng, TraceSink* trace) {
    if (strip.len < 1) throw ValidationError("strip length must be >= 1");
    const int strip_end = strip.start + strip.len;
    const std::vector<int>& lengths = inv.strip_lengths();

    std::vector<Placement> out;
    int frontier = strip.start;
    int remaining = strip.len;
    while (remaining > 0) {
        DecisionTrace dt;
        int best_len = -1;
        double best_cost = std::numeric_limits<double>::infinity();
        for (int l : lengths) {
            if (l > remaining) continue;
            const double e = params.epsilon_scale > 0 ? rng.uniform(params.epsilon_scale) : 0.0;
            const double m = multiplicity(l, inv.l0());
            const int n = remainder_count(remaining - l, inv.l0(), params.rho, lengths);
            const int border = frontier + l;
            const double d = border < strip_end
                                 ? gap_penalty(gaps, strip, border, params.gamma1, params.gamma2)
                                 : 0.0;
            const double cost = m + n + d + e;
            if (trace) dt.candidates.push_back({l, m, double(n), d, e, cost});
            if (cost < best_cost || (cost == best_cost && l > best_len)) {
                best_cost = cost;
                best_len = l;
            }
        }
        // A 1x1 kind always fits, so a best candidate always exists.
        if (best_len < 0) throw ValidationError("no brick fits the strip remainder");

        if (trace) {
            dt.strip = strip;
            dt.frontier = frontier;
            dt.remaining = remaining;
            dt.chosen_length = best_len;
            trace->decision(dt);
        }

        Placement p;
        p.kind = {1, best_len};
        p.z = strip.z;
        p.axis = strip.axis;
        if (strip.axis == Axis::X) {
            p.x = frontier;
            p.y = strip.cross;
        } else {
            p.x = strip.cross;
            p.y = frontier;
        }
        out.push_back(p);

        const int border = frontier + best_len;
        if (border < strip_end) gaps.add({strip.z, strip.axis, strip.cross, border});
        frontier += best_len;
        remaining -= best_len;
    }
    return out;
}

std::vector<Placement> merge_adjacent(const std::vector<Placement>& placements,
                                      const Inventory& inv) {
    // Key a 1-wide placement by everything a mergeable partner must share;
    // the partner differs only by +1 in the cross coordinate.
    struct KeyHash {
        std::size_t operator()(const std::array<int, 5>& k) const {
            std::size_t h = 1469598103934665603ull;
            for (int v : k) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
            return h;
        }
    };
    auto key_of = [](const Placement& p) -> std::array<int, 5> {
        const int along = p.axis == Axis::X ? p.x : p.y;
        const int cross = p.axis == Axis::X ? p.y : p.x;
        return {p.z, static_cast<int>(p.axis), along, p.kind.length, cross};
    };

    std::unordered_map<std::array<int, 5>, std::size_t, KeyHash> index;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        if (placements[i].kind.width == 1) index.emplace(key_of(placements[i]), i);
    }

    std::vector<bool> consumed(placements.size(), false);
    std::vector<Placement> out;
    out.reserve(placements.size());
    for (std::size_t i = 0; i < placements.size(); ++i) {
        if (consumed[i]) continue;
        const Placement& p = placements[i];
        if (p.kind.width == 1 && inv.has_kind(2, p.kind.length)) {
            auto key = key_of(p);
            key[4] += 1;  // partner one row over
            if (auto it = index.find(key); it != index.end() && !consumed[it->second] &&
                                           it->second != i) {
                const Placement& q = placements[it->second];
                Placement merged;
                merged.kind = {2, p.kind.length};
                merged.z = p.z;
                merged.axis = merged.kind.square() ? Axis::X : p.axis;
                merged.x = std::min(p.x, q.x);
                merged.y = std::min(p.y, q.y);
                consumed[i] = consumed[it->second] = true;
                out.push_back(merged);
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

OptimizeResult optimize(const VoxelGrid& grid, const Inventory& inv, const CostParams& params,
                        LayerAxisRule rule, TraceSink* trace) {
    check_params(params);
    OptimizeResult result;
    Rng rng(params.seed);
    for (const Strip& strip : segment(grid, rule)) {
        std::vector<Placement> placed =
            place_strip(strip, inv, result.gaps, params, rng, trace);
        result.build_list.insert(result.build_list.end(), placed.begin(), placed.end());
    }
    result.build_list = merge_adjacent(result.build_list, inv);
    return result;
}

}  // namespace brickplan

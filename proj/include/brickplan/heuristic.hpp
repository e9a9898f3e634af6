#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "brickplan/bricks.hpp"
#include "brickplan/voxel_grid.hpp"

namespace brickplan {

// Knobs of the strip-stage cost function
//   F(b, L) = M(l_b, l0) + N(L - l_b, l0) + D(b, G) + e.
struct CostParams {
    int rho = 8;                  // remaining length at which the exact subsolver takes over
    double gamma1 = 2.0;          // border-gap penalty amplitude
    double gamma2 = 1.0;          // border-gap penalty decay per cell of distance
    double epsilon_scale = 0.25;  // e ~ Uniform[0, epsilon_scale], drawn per candidate per round
    std::uint64_t seed = 0;
};

enum class LayerAxisRule {
    AlternateXY,  // X strips on even layers, Y on odd (default)
    AlternateYX,
    AlwaysX,
    AlwaysY,
};

// Maximal 1-wide run of occupied cells in one layer, along that layer's
// strip axis. `cross` is the fixed perpendicular coordinate, `start` the
// low end of the run along the axis.
struct Strip {
    int z = 0;
    Axis axis = Axis::X;
    int cross = 0;
    int start = 0;
    int len = 0;

    friend bool operator==(const Strip&, const Strip&) = default;
};

// Border between two consecutive bricks of one strip: the boundary plane at
// `coord` along the strip axis, spanning the strip's unit-wide cross band
// [cross, cross+1]. Strip ends at the silhouette are not gaps.
struct Gap {
    int z = 0;
    Axis axis = Axis::X;
    int cross = 0;
    int coord = 0;

    friend bool operator==(const Gap&, const Gap&) = default;
};

class GapSet {
public:
    void add(const Gap& g);
    const std::vector<Gap>& all() const { return gaps_; }
    bool empty() const { return gaps_.empty(); }

    // Smallest axis-aligned distance from a border the current strip would
    // create at `border_coord` to any recorded gap in the immediately
    // adjacent parallel strips of the same layer or in the layer directly
    // below. +infinity when no gap is relevant.
    double min_border_distance(const Strip& strip, int border_coord) const;

private:
    using Key = std::tuple<int, int, int>;  // (z, axis, third)
    std::vector<Gap> gaps_;
    std::map<Key, std::vector<int>> by_cross_;  // (z, axis, cross) -> coords
    std::map<Key, std::vector<int>> by_coord_;  // (z, axis, coord) -> crosses
};

// Pairs of gaps in consecutive layers whose border segments touch in plan
// view: the weak seams the stagger penalty exists to avoid.
std::size_t count_aligned_gap_pairs(const GapSet& gaps);

// Deterministic uniform draws; the explicit 53-bit mapping keeps runs
// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double scale) { return scale * ((eng_() >> 11) * 0x1.0p-53); }

private:
    std::mt19937_64 eng_;
};

// Cost terms. multiplicity is l0 / l_b; remainder_count is
// ceil((L - rho) / l0) + lp_int(rho) once L >= rho and lp_int(L) below that.
double multiplicity(int l_b, int l0);
int remainder_count(int remaining, int l0, int rho, const std::vector<int>& lengths);
double gap_penalty(const GapSet& gaps, const Strip& strip, int border_coord, double gamma1,
                   double gamma2);

// One strip-filling decision round, for the optional trace hook.
struct CandidateTrace {
    int length = 0;
    double m = 0, n = 0, d = 0, e = 0, cost = 0;
};
struct DecisionTrace {
    Strip strip;
    int frontier = 0;
    int remaining = 0;
    std::vector<CandidateTrace> candidates;
    int chosen_length = 0;
};
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void decision(const DecisionTrace& d) = 0;
};

// Greedily fills one strip, lowest-cost brick first, recording every border
// between consecutive bricks into `gaps`. Only 1-wide kinds participate.
std::vector<Placement> place_strip(const Strip& strip, const Inventory& inv, GapSet& gaps,
                                   const CostParams& params, Rng& rng,
                                   TraceSink* trace = nullptr);

// Layer-by-layer decomposition into maximal 1-wide runs, bottom layer first,
// row-major within a layer. Strip axis alternates per `rule`.
std::vector<Strip> segment(const VoxelGrid& grid, LayerAxisRule rule = LayerAxisRule::AlternateXY);

// Replaces side-by-side aligned pairs of equal-length 1-wide bricks with one
// 2-wide brick where the inventory has that kind. Never increases the brick
// count, never changes the covered cells.
std::vector<Placement> merge_adjacent(const std::vector<Placement>& placements,
                                      const Inventory& inv);

struct OptimizeResult {
    std::vector<Placement> build_list;
    GapSet gaps;  // as recorded during placement, for stagger diagnostics
};

// The full three-stage pass: segment, fill strips with the gap set threaded
// through, merge. Identical inputs and seed give identical output.
OptimizeResult optimize(const VoxelGrid& grid, const Inventory& inv, const CostParams& params,
                        LayerAxisRule rule = LayerAxisRule::AlternateXY,
                        TraceSink* trace = nullptr);

}  // namespace brickplan

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace brickplan {

// Footprint of a brick: width cells across, length cells along. Bricks are
// one cell high, width is 1 or 2, and length >= width (a "2x1" is just a 1x2
// turned sideways, so it cannot exist as a kind).
struct BrickKind {
    int width = 1;
    int length = 1;

    int area() const { return width * length; }
    bool square() const { return width == length; }

    friend auto operator<=>(const BrickKind&, const BrickKind&) = default;
};

class Inventory {
public:
    // Standard basic bricks: 1x1..1x8 plus 2x2 and 2x4.
    static Inventory standard();

    explicit Inventory(std::vector<BrickKind> kinds);

    const std::vector<BrickKind>& kinds() const { return kinds_; }

    // Longest length over all kinds (l0).
    int l0() const { return l0_; }

    // Lengths of the 1-wide kinds, in inventory order. These drive the strip
    // stage and the remainder subproblem; 2-wide kinds only enter via merging.
    const std::vector<int>& strip_lengths() const { return strip_lengths_; }

    bool has_kind(int width, int length) const { return kind_index(width, length) >= 0; }
    int kind_index(int width, int length) const;

    nlohmann::json to_json() const;
    static Inventory from_json(const nlohmann::json& j);

private:
    std::vector<BrickKind> kinds_;
    std::vector<int> strip_lengths_;
    int l0_ = 0;
};

enum class Axis : std::uint8_t { X = 0, Y = 1 };

inline char axis_name(Axis a) { return a == Axis::X ? 'x' : 'y'; }

// One brick instance: kind placed with its min corner at (x, y) on layer z,
// length running along `axis`. Square kinds are canonically Axis::X.
struct Placement {
    BrickKind kind;
    int x = 0;
    int y = 0;
    int z = 0;
    Axis axis = Axis::X;

    int extent_x() const { return axis == Axis::X ? kind.length : kind.width; }
    int extent_y() const { return axis == Axis::X ? kind.width : kind.length; }

    bool covers(int cx, int cy, int cz) const {
        return cz == z && cx >= x && cx < x + extent_x() && cy >= y && cy < y + extent_y();
    }

    template <typename F>
    void for_each_cell(F&& f) const {
        for (int dy = 0; dy < extent_y(); ++dy)
            for (int dx = 0; dx < extent_x(); ++dx) f(x + dx, y + dy, z);
    }

    friend bool operator==(const Placement&, const Placement&) = default;
};

// Canonical ordering: scan position first, then kind index in the inventory,
// then axis. Used for reproducible outputs and exact-solver tie-breaking.
struct PlacementOrder {
    const Inventory* inv;
    bool operator()(const Placement& a, const Placement& b) const;
};

void sort_placements(std::vector<Placement>& placements, const Inventory& inv);

}  // namespace brickplan

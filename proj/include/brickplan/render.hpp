#pragma once

#include <string>
#include <vector>

#include "brickplan/plan.hpp"

namespace brickplan {

// Fixed rendering scale: one grid module is 20 SVG units.
inline constexpr int kModulePx = 20;

// Rectangles (in module units) a top view consists of, before they are
// serialized to SVG. Kept separate so tests can check view contents without
// parsing markup.
struct ViewRect {
    int x = 0, y = 0, w = 0, h = 0;  // module coordinates, y up
    bool bold = false;               // bold outline = placed this step
};

// Top view of step k: that layer's bricks bold, everything built on lower
// layers dimmed underneath. Canvas size is the full grid footprint for every
// step. step_index is 1-based.
std::vector<ViewRect> top_view_rects(const BuildPlan& plan, int step_index);
std::string render_top_view(const BuildPlan& plan, int step_index);

// Front (X-Z) side view of everything built through step k, with layer
// boundary lines. Throws ValidationError when step_index is out of range.
std::string render_side_view(const BuildPlan& plan, int through_step);

}  // namespace brickplan

#include "brickplan/render.hpp"

#include <string>

#include "brickplan/errors.hpp"

namespace brickplan {

namespace {

constexpr const char* kBrickFill = "#e8994a";

void check_step(const BuildPlan& plan, int step_index) {
    if (step_index < 1 || step_index > static_cast<int>(plan.steps.size())) {
        throw ValidationError("step index " + std::to_string(step_index) + " out of range (1.." +
                              std::to_string(plan.steps.size()) + ")");
    }
}

std::string svg_open(int w_modules, int h_modules) {
    const int w = w_modules * kModulePx;
    const int h = h_modules * kModulePx;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                    "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
                    " " + std::to_string(h) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" fill=\"#ffffff\"/>\n";
    return s;
}

std::string rect_svg(int px, int py, int pw, int ph, bool bold) {
    std::string s = "<rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
                    "\" width=\"" + std::to_string(pw) + "\" height=\"" + std::to_string(ph) +
                    "\" fill=\"" + kBrickFill + "\"";
    if (bold) {
        s += " stroke=\"#333333\" stroke-width=\"2\"";
    } else {
        s += " fill-opacity=\"0.3\" stroke=\"#999999\" stroke-width=\"1\"";
    }
    s += "/>\n";
    return s;
}

}  // namespace

std::vector<ViewRect> top_view_rects(const BuildPlan& plan, int step_index) {
    check_step(plan, step_index);
    std::vector<ViewRect> rects;
    for (const BuildStep& s : plan.steps) {
        if (s.index > step_index) break;
        const bool bold = s.index == step_index;
        for (const Placement& p : s.new_placements) {
            rects.push_back({p.x, p.y, p.extent_x(), p.extent_y(), bold});
        }
    }
    return rects;
}

std::string render_top_view(const BuildPlan& plan, int step_index) {
    const int nx = plan.grid_dims[0];
    const int ny = plan.grid_dims[1];
    std::string svg = svg_open(nx, ny);
    for (const ViewRect& r : top_view_rects(plan, step_index)) {
        // y axis points up in grid space, down in SVG space.
        const int px = r.x * kModulePx;
        const int py = (ny - r.y - r.h) * kModulePx;
        svg += rect_svg(px, py, r.w * kModulePx, r.h * kModulePx, r.bold);
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_side_view(const BuildPlan& plan, int through_step) {
    check_step(plan, through_step);
    const int nx = plan.grid_dims[0];
    const int nz = plan.grid_dims[2];

    // Column silhouette: filled iff any placement through the step covers
    // some (x, *, z).
    std::vector<std::uint8_t> filled(static_cast<std::size_t>(nx) * nz, 0);
    for (const BuildStep& s : plan.steps) {
        if (s.index > through_step) break;
        for (const Placement& p : s.new_placements) {
            for (int dx = 0; dx < p.extent_x(); ++dx) {
                filled[static_cast<std::size_t>(p.z) * nx + p.x + dx] = 1;
            }
        }
    }

    std::string svg = svg_open(nx, nz);
    for (int z = 0; z < nz; ++z) {
        for (int x = 0; x < nx; ++x) {
            if (!filled[static_cast<std::size_t>(z) * nx + x]) continue;
            const int px = x * kModulePx;
            const int py = (nz - z - 1) * kModulePx;
            svg += "<rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
                   "\" width=\"" + std::to_string(kModulePx) + "\" height=\"" +
                   std::to_string(kModulePx) + "\" fill=\"" + kBrickFill +
                   "\" stroke=\"#777777\" stroke-width=\"1\"/>\n";
        }
    }
    // Layer boundaries across the full width.
    for (int z = 1; z < nz; ++z) {
        const int py = z * kModulePx;
        svg += "<line x1=\"0\" y1=\"" + std::to_string(py) + "\" x2=\"" +
               std::to_string(nx * kModulePx) + "\" y2=\"" + std::to_string(py) +
               "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace brickplan

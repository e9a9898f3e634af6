#include "brickplan/plan.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "brickplan/coverage.hpp"
#include "brickplan/errors.hpp"

namespace brickplan {

std::size_t BuildPlan::total_bricks() const {
    std::size_t n = 0;
    for (const BuildStep& s : steps) n += s.new_placements.size();
    return n;
}

std::vector<Placement> BuildPlan::cumulative_through(int step_index) const {
    std::vector<Placement> out;
    for (const BuildStep& s : steps) {
        if (s.index > step_index) break;
        out.insert(out.end(), s.new_placements.begin(), s.new_placements.end());
    }
    return out;
}

BuildPlan make_plan(const std::vector<Placement>& build_list, const VoxelGrid& grid) {
    PartitionReport report = validate_partition(build_list, grid);
    if (!report.ok()) {
        throw ValidationError("build list is not an exact partition of the grid:\n" +
                              report.summary());
    }

    BuildPlan plan;
    plan.grid_dims = {grid.nx(), grid.ny(), grid.nz()};

    std::map<int, std::vector<Placement>> by_layer;
    for (const Placement& p : build_list) by_layer[p.z].push_back(p);

    std::map<BrickKind, int> counts;
    int index = 0;
    for (auto& [layer, placements] : by_layer) {
        std::sort(placements.begin(), placements.end(), [](const Placement& a, const Placement& b) {
            return std::tuple(a.y, a.x, a.kind.width, a.kind.length, a.axis) <
                   std::tuple(b.y, b.x, b.kind.width, b.kind.length, b.axis);
        });
        for (const Placement& p : placements) ++counts[p.kind];
        plan.steps.push_back({++index, layer, std::move(placements)});
    }
    for (const auto& [kind, n] : counts) plan.inventory_counts.emplace_back(kind, n);
    return plan;
}

nlohmann::json export_plan(const BuildPlan& plan) {
    nlohmann::json j;
    j["grid_dims"] = {plan.grid_dims[0], plan.grid_dims[1], plan.grid_dims[2]};
    nlohmann::json inv = nlohmann::json::array();
    for (const auto& [kind, count] : plan.inventory_counts) {
        inv.push_back({{"width", kind.width}, {"length", kind.length}, {"count", count}});
    }
    j["inventory"] = std::move(inv);
    nlohmann::json steps = nlohmann::json::array();
    for (const BuildStep& s : plan.steps) {
        nlohmann::json placements = nlohmann::json::array();
        for (const Placement& p : s.new_placements) {
            placements.push_back({{"x", p.x},
                                  {"y", p.y},
                                  {"z", p.z},
                                  {"axis", std::string(1, axis_name(p.axis))},
                                  {"width", p.kind.width},
                                  {"length", p.kind.length}});
        }
        steps.push_back({{"index", s.index}, {"layer", s.layer}, {"placements", std::move(placements)}});
    }
    j["steps"] = std::move(steps);
    return j;
}

BuildPlan import_plan(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("grid_dims") || !j.contains("inventory") ||
        !j.contains("steps")) {
        throw ParseError("plan JSON needs 'grid_dims', 'inventory' and 'steps'");
    }
    BuildPlan plan;
    const auto& dims = j.at("grid_dims");
    if (!dims.is_array() || dims.size() != 3) throw ParseError("'grid_dims' must be [nx, ny, nz]");
    plan.grid_dims = {dims.at(0).get<int>(), dims.at(1).get<int>(), dims.at(2).get<int>()};

    for (const auto& item : j.at("inventory")) {
        if (!item.contains("width") || !item.contains("length") || !item.contains("count")) {
            throw ParseError("inventory entry must be {width, length, count}");
        }
        plan.inventory_counts.emplace_back(
            BrickKind{item.at("width").get<int>(), item.at("length").get<int>()},
            item.at("count").get<int>());
    }

    for (const auto& step : j.at("steps")) {
        if (!step.contains("index") || !step.contains("layer") || !step.contains("placements")) {
            throw ParseError("step entry must be {index, layer, placements}");
        }
        BuildStep s;
        s.index = step.at("index").get<int>();
        s.layer = step.at("layer").get<int>();
        for (const auto& pj : step.at("placements")) {
            Placement p;
            p.x = pj.at("x").get<int>();
            p.y = pj.at("y").get<int>();
            p.z = pj.at("z").get<int>();
            std::string axis = pj.at("axis").get<std::string>();
            if (axis != "x" && axis != "y") throw ParseError("placement axis must be 'x' or 'y'");
            p.axis = axis == "x" ? Axis::X : Axis::Y;
            p.kind = {pj.at("width").get<int>(), pj.at("length").get<int>()};
            s.new_placements.push_back(p);
        }
        plan.steps.push_back(std::move(s));
    }
    return plan;
}

}  // namespace brickplan

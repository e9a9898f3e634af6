#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brickplan/coverage.hpp"
#include "brickplan/errors.hpp"
#include "brickplan/exact.hpp"
#include "brickplan/heuristic.hpp"
#include "brickplan/mesh_io.hpp"
#include "brickplan/plan.hpp"
#include "brickplan/render.hpp"
#include "brickplan/voxelize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes, also documented in the README:
//   0 success, 1 verification failed, 2 parse/schema error, 3 I/O error,
//   4 invalid arguments or config, 5 exact solver cap exceeded.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParse = 2,
    kIo = 3,
    kInvalid = 4,
    kExactCap = 5,
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::ios_base::failure("cannot read " + path.string());
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    out << content;
    if (!out.good()) throw std::ios_base::failure("cannot write " + path.string());
}

json parse_json_file(const fs::path& path) {
    const std::string text = read_file(path);
    return json::parse(text);  // json::exception maps to kParse at the top level
}

brickplan::Inventory load_inventory(const std::string& path) {
    if (path.empty()) return brickplan::Inventory::standard();
    return brickplan::Inventory::from_json(parse_json_file(path));
}

brickplan::CostParams load_params(const std::string& path) {
    brickplan::CostParams p;
    if (path.empty()) return p;
    const json j = parse_json_file(path);
    if (!j.is_object()) throw brickplan::ParseError("params file must be a JSON object");
    if (j.contains("rho")) p.rho = j.at("rho").get<int>();
    if (j.contains("gamma1")) p.gamma1 = j.at("gamma1").get<double>();
    if (j.contains("gamma2")) p.gamma2 = j.at("gamma2").get<double>();
    if (j.contains("epsilon_scale")) p.epsilon_scale = j.at("epsilon_scale").get<double>();
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    return p;
}

brickplan::VoxelGrid load_grid_input(const std::string& path, int dim) {
    if (fs::path(path).extension() == ".obj") {
        brickplan::TriangleMesh mesh = brickplan::parse_obj(read_file(path));
        return brickplan::voxelize(mesh, dim);
    }
    return brickplan::VoxelGrid::from_json(parse_json_file(path));
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

class JsonlTrace : public brickplan::TraceSink {
public:
    explicit JsonlTrace(const fs::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::ios_base::failure("cannot open trace file " + path.string());
    }

    void decision(const brickplan::DecisionTrace& d) override {
        json cands = json::array();
        for (const auto& c : d.candidates) {
            cands.push_back({{"length", c.length},
                             {"M", c.m},
                             {"N", c.n},
                             {"D", c.d},
                             {"e", c.e},
                             {"F", c.cost}});
        }
        json line = {{"strip",
                      {{"z", d.strip.z},
                       {"axis", std::string(1, brickplan::axis_name(d.strip.axis))},
                       {"cross", d.strip.cross},
                       {"start", d.strip.start},
                       {"len", d.strip.len}}},
                     {"frontier", d.frontier},
                     {"remaining", d.remaining},
                     {"candidates", cands},
                     {"chosen", d.chosen_length}};
        out_ << line.dump() << "\n";
    }

private:
    std::ofstream out_;
};

struct SolveConfig {
    std::vector<std::string> inputs;
    int dim = 16;
    std::string inventory_path;
    std::string params_path;
    std::optional<std::uint64_t> seed;
    bool exact = false;
    std::string trace_path;
    std::string out_dir = "plan_out";
    std::string axis_rule = "xy";
    std::size_t exact_cap = 512;
    int jobs = 1;
};

brickplan::LayerAxisRule parse_axis_rule(const std::string& s) {
    if (s == "xy") return brickplan::LayerAxisRule::AlternateXY;
    if (s == "yx") return brickplan::LayerAxisRule::AlternateYX;
    if (s == "x") return brickplan::LayerAxisRule::AlwaysX;
    if (s == "y") return brickplan::LayerAxisRule::AlwaysY;
    throw brickplan::ValidationError("--axis-rule must be one of xy, yx, x, y");
}

void write_views(const brickplan::BuildPlan& plan, const fs::path& dir) {
    for (const brickplan::BuildStep& step : plan.steps) {
        write_file(dir / ("step_" + std::to_string(step.index) + "_top.svg"),
                   brickplan::render_top_view(plan, step.index));
        write_file(dir / ("step_" + std::to_string(step.index) + "_side.svg"),
                   brickplan::render_side_view(plan, step.index));
    }
}

void plan_summary(const brickplan::BuildPlan& plan, std::ostream& os) {
    os << "bricks: " << plan.total_bricks() << "\n";
    for (const auto& [kind, count] : plan.inventory_counts) {
        os << "  " << kind.width << "x" << kind.length << ": " << count << "\n";
    }
}

int solve_one(const SolveConfig& cfg, const std::string& input, const fs::path& out_dir,
              std::ostream& log) {
    brickplan::Inventory inv = load_inventory(cfg.inventory_path);
    brickplan::CostParams params = load_params(cfg.params_path);
    if (cfg.seed) params.seed = *cfg.seed;

    brickplan::VoxelGrid grid = load_grid_input(input, cfg.dim);
    log << "grid " << grid.nx() << "x" << grid.ny() << "x" << grid.nz() << ", "
        << grid.occupied_count() << " voxels\n";

    std::vector<brickplan::Placement> build_list;
    if (cfg.exact) {
        brickplan::ExactOptions opts;
        opts.cell_cap = cfg.exact_cap;
        brickplan::ExactResult res = brickplan::solve_exact(grid, inv, opts);
        if (!res.optimal) {
            log << "note: node budget exhausted, result may be suboptimal\n";
        }
        build_list = std::move(res.placements);
    } else {
        std::optional<JsonlTrace> trace;
        if (!cfg.trace_path.empty()) trace.emplace(cfg.trace_path);
        brickplan::OptimizeResult res =
            brickplan::optimize(grid, inv, params, parse_axis_rule(cfg.axis_rule),
                                trace ? &*trace : nullptr);
        build_list = std::move(res.build_list);
    }

    brickplan::BuildPlan plan = brickplan::make_plan(build_list, grid);

    fs::create_directories(out_dir);
    write_file(out_dir / "plan.json", dump_json(brickplan::export_plan(plan)));
    write_file(out_dir / "grid.json", dump_json(grid.to_json()));
    write_views(plan, out_dir);
    plan_summary(plan, log);
    log << "wrote " << (out_dir / "plan.json").string() << " and " << plan.steps.size()
        << " step views\n";
    return kOk;
}

int classify_current_exception(std::ostream& log) {
    try {
        throw;
    } catch (const brickplan::InstanceTooLarge& e) {
        log << "error: " << e.what() << "\n";
        return kExactCap;
    } catch (const brickplan::ParseError& e) {
        log << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        log << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const brickplan::ValidationError& e) {
        log << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::ios_base::failure& e) {
        log << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        log << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

// Several inputs: one output subdirectory per input stem, optionally solved
// in parallel. Each file is solved independently; logs print in input order.
int solve_many(const SolveConfig& cfg) {
    const int n = static_cast<int>(cfg.inputs.size());
    std::vector<std::string> logs(n);
    std::vector<int> codes(n, kOk);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs) if (cfg.jobs > 1)
#endif
    for (int i = 0; i < n; ++i) {
        std::ostringstream log;
        try {
            const fs::path out = fs::path(cfg.out_dir) / fs::path(cfg.inputs[i]).stem();
            codes[i] = solve_one(cfg, cfg.inputs[i], out, log);
        } catch (...) {
            codes[i] = classify_current_exception(log);
        }
        logs[i] = log.str();
    }

    int worst = kOk;
    for (int i = 0; i < n; ++i) {
        std::cout << "== " << cfg.inputs[i] << "\n" << logs[i];
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

int run_verify(const std::string& plan_path, const std::string& grid_path) {
    brickplan::BuildPlan plan = brickplan::import_plan(parse_json_file(plan_path));
    brickplan::VoxelGrid grid = brickplan::VoxelGrid::from_json(parse_json_file(grid_path));

    std::vector<brickplan::Placement> placements;
    for (const auto& step : plan.steps) {
        placements.insert(placements.end(), step.new_placements.begin(),
                          step.new_placements.end());
    }
    brickplan::PartitionReport report = brickplan::validate_partition(placements, grid);
    std::cout << report.summary();
    return report.ok() ? kOk : kVerifyFailed;
}

int run_render(const std::string& plan_path, const std::string& out_dir) {
    brickplan::BuildPlan plan = brickplan::import_plan(parse_json_file(plan_path));
    fs::create_directories(out_dir);
    write_views(plan, out_dir);
    std::cout << "wrote " << plan.steps.size() << " step views to " << out_dir << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brickplan: turn a triangle mesh into layered brick building instructions"};
    app.require_subcommand(1);

    // voxelize
    auto* vox = app.add_subcommand("voxelize", "Voxelize an OBJ mesh into a grid JSON file");
    std::string vox_input, vox_output = "grid.json";
    int vox_dim = 16;
    vox->add_option("input", vox_input, "input .obj file")->required();
    vox->add_option("--dim", vox_dim, "cells along the longest axis");
    vox->add_option("-o,--output", vox_output, "output grid JSON path");

    // solve
    auto* solve = app.add_subcommand("solve", "Optimize a brick layout and emit plan + views");
    SolveConfig scfg;
    std::uint64_t solve_seed = 0;
    solve->add_option("inputs", scfg.inputs, "input .obj meshes or grid .json files")->required();
    solve->add_option("--dim", scfg.dim, "cells along the longest axis (for .obj input)");
    solve->add_option("--inventory", scfg.inventory_path, "inventory JSON file");
    solve->add_option("--params", scfg.params_path, "cost parameter JSON file");
    auto* seed_opt = solve->add_option("--seed", solve_seed, "RNG seed (overrides params file)");
    solve->add_flag("--exact", scfg.exact, "use the exact set-partitioning solver");
    solve->add_option("--exact-cap", scfg.exact_cap, "occupied-cell cap for --exact");
    solve->add_option("--trace", scfg.trace_path, "write per-decision cost trace (JSON lines)");
    solve->add_option("--axis-rule", scfg.axis_rule, "strip axis per layer: xy, yx, x or y");
    solve->add_option("--jobs", scfg.jobs, "solve multiple input files in parallel");
    solve->add_option("-o,--output", scfg.out_dir, "output directory");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a plan against a grid (exact partition)");
    std::string verify_plan, verify_grid;
    verify->add_option("plan", verify_plan, "plan JSON file")->required();
    verify->add_option("grid", verify_grid, "grid JSON file")->required();

    // render
    auto* render = app.add_subcommand("render", "Re-render step views from a plan JSON file");
    std::string render_plan, render_out = "plan_out";
    render->add_option("plan", render_plan, "plan JSON file")->required();
    render->add_option("-o,--output", render_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }

    try {
        if (vox->parsed()) {
            if (vox_dim < 1) {
                throw brickplan::ValidationError("--dim must be >= 1, got " +
                                                 std::to_string(vox_dim));
            }
            brickplan::TriangleMesh mesh = brickplan::parse_obj(read_file(vox_input));
            brickplan::VoxelGrid grid = brickplan::voxelize(mesh, vox_dim);
            write_file(vox_output, dump_json(grid.to_json()));
            std::cout << "dims " << grid.nx() << " " << grid.ny() << " " << grid.nz() << "\n"
                      << "occupied " << grid.occupied_count() << "\n";
            return kOk;
        }
        if (solve->parsed()) {
            if (scfg.dim < 1) {
                throw brickplan::ValidationError("--dim must be >= 1, got " +
                                                 std::to_string(scfg.dim));
            }
            if (scfg.jobs < 1) {
                throw brickplan::ValidationError("--jobs must be >= 1, got " +
                                                 std::to_string(scfg.jobs));
            }
            if (seed_opt->count() > 0) scfg.seed = solve_seed;
            if (scfg.inputs.size() == 1) {
                return solve_one(scfg, scfg.inputs[0], scfg.out_dir, std::cout);
            }
            if (!scfg.trace_path.empty()) {
                throw brickplan::ValidationError("--trace requires a single input file");
            }
            return solve_many(scfg);
        }
        if (verify->parsed()) return run_verify(verify_plan, verify_grid);
        if (render->parsed()) return run_render(render_plan, render_out);
    } catch (const brickplan::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: rerun without --exact to use the heuristic solver\n";
        return kExactCap;
    } catch (const brickplan::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const brickplan::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}

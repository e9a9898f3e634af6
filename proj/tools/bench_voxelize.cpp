// Compares the serial reference rasterizer against the OpenMP one on a
// synthetic high-triangle-count mesh and checks they produce the same grid.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "brickplan/voxelize.hpp"

using brickplan::TriangleMesh;
using brickplan::Vec3;
using brickplan::VoxelGrid;

namespace {

TriangleMesh make_uv_sphere(int stacks, int slices) {
    TriangleMesh mesh;
    constexpr double kPi = 3.14159265358979323846;
    for (int i = 0; i <= stacks; ++i) {
        const double phi = kPi * i / stacks;
        for (int j = 0; j < slices; ++j) {
            const double theta = 2.0 * kPi * j / slices;
            mesh.vertices.push_back(
                {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)});
        }
    }
    auto vid = [&](int i, int j) { return static_cast<std::uint32_t>(i * slices + (j % slices)); };
    for (int i = 0; i < stacks; ++i) {
        for (int j = 0; j < slices; ++j) {
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    }
    return mesh;
}

double run_ms(void (*mark)(const TriangleMesh&, VoxelGrid&), const TriangleMesh& scaled,
              VoxelGrid& grid) {
    const auto t0 = std::chrono::steady_clock::now();
    mark(scaled, grid);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int dim = 96;
    int stacks = 192;
    int slices = 192;
    int reps = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const int value = std::atoi(argv[i + 1]);
        if (flag == "--dim") dim = value;
        else if (flag == "--stacks") stacks = value;
        else if (flag == "--slices") slices = value;
        else if (flag == "--reps") reps = value;
    }

    const TriangleMesh mesh = make_uv_sphere(stacks, slices);
    int dims[3];
    const TriangleMesh scaled = brickplan::scale_to_grid(mesh, dim, dims);
    std::cout << "mesh: " << mesh.triangles.size() << " triangles, grid " << dims[0] << "x"
              << dims[1] << "x" << dims[2] << "\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    double best_serial = 1e300, best_parallel = 1e300;
    VoxelGrid serial_grid(dims[0], dims[1], dims[2]);
    VoxelGrid parallel_grid(dims[0], dims[1], dims[2]);
    for (int r = 0; r < reps; ++r) {
        VoxelGrid gs(dims[0], dims[1], dims[2]);
        VoxelGrid gp(dims[0], dims[1], dims[2]);
        best_serial = std::min(best_serial, run_ms(brickplan::mark_surface_serial, scaled, gs));
        best_parallel =
            std::min(best_parallel, run_ms(brickplan::mark_surface_parallel, scaled, gp));
        serial_grid = gs;
        parallel_grid = gp;
    }

    std::cout << "surface mark serial:   " << best_serial << " ms\n";
    std::cout << "surface mark parallel: " << best_parallel << " ms\n";
    std::cout << "speedup: " << best_serial / best_parallel << "x\n";

    if (!(serial_grid == parallel_grid)) {
        std::cout << "MISMATCH: serial and parallel grids differ\n";
        return 1;
    }
    std::cout << "grids identical (" << serial_grid.occupied_count() << " surface cells)\n";
    return 0;
}

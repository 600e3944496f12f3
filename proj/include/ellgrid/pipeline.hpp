#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "ellgrid/boundary.hpp"
#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"
#include "ellgrid/solver.hpp"
#include "ellgrid/stretching.hpp"
#include "ellgrid/writers.hpp"

namespace ellgrid {

/// Everything one mesh-generation run needs: grid shape, boundary source,
/// clustering passes in application order, solver settings, and which
/// files to emit. An empty path means the output is not requested.
struct RunConfig {
    std::size_t nx = 33;
    std::size_t ny = 33;

    double circle_radius = 1.0;
    std::string boundary_csv; // empty: built-in circle

    std::vector<ClusterSpec> clusters;
    SolverConfig solver;

    std::string gmv_path;
    GmvCompat gmv_compat = GmvCompat::ValidGmv;
    std::string matlab_path;
    std::string svg_path;
    std::string residuals_path;
    std::string param_svg_path;

    [[nodiscard]] bool any_output() const {
        return !gmv_path.empty() || !matlab_path.empty() || !svg_path.empty() ||
               !residuals_path.empty();
    }
};

namespace detail {

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file '" + path + "'");
    }
    return out;
}

} // namespace detail

/// Result of a pipeline run, for callers that want more than the exit code.
struct RunResult {
    StructuredGrid mesh;
    StructuredGrid param;
    ConvergenceReport report;
};

/// The full pipeline: build the parameter grid by clustering a uniform
/// grid, impose the boundary on a second uniform grid and fill its interior
/// by transfinite interpolation, relax, then write whatever was requested.
inline RunResult run_pipeline(const RunConfig& config) {
    if (config.nx < 3 || config.ny < 3) {
        throw DimensionError("grid dimensions must be at least 3x3");
    }

    StructuredGrid param(config.nx, config.ny);
    for (const ClusterSpec& spec : config.clusters) {
        param = apply_cluster(std::move(param), spec);
    }

    BoundarySpec boundary = CircleBoundary{config.circle_radius};
    if (!config.boundary_csv.empty()) {
        std::ifstream in(config.boundary_csv);
        if (!in) {
            throw Error("cannot open boundary file '" + config.boundary_csv + "'");
        }
        boundary = load_boundary_polyline(in, config.nx, config.ny);
    }
    StructuredGrid physical = tfi_fill(apply_boundary(StructuredGrid(config.nx, config.ny),
                                                      boundary));

    auto [mesh, report] = solve(std::move(physical), param, config.solver);

    if (!config.gmv_path.empty()) {
        auto out = detail::open_output(config.gmv_path);
        write_gmv(mesh, out, config.gmv_compat);
    }
    if (!config.matlab_path.empty()) {
        auto out = detail::open_output(config.matlab_path);
        write_matlab(mesh, out);
    }
    if (!config.svg_path.empty()) {
        auto out = detail::open_output(config.svg_path);
        write_svg(mesh, out);
    }
    if (!config.residuals_path.empty()) {
        auto out = detail::open_output(config.residuals_path);
        residual_log(report, out);
    }
    if (!config.param_svg_path.empty()) {
        auto out = detail::open_output(config.param_svg_path);
        write_svg(param, out);
    }

    return {std::move(mesh), std::move(param), std::move(report)};
}

/// Exit-status flavour of run_pipeline: 0 on convergence, 2 when the
/// iteration cap was hit first (outputs are still written).
inline int run(const RunConfig& config) {
    const RunResult result = run_pipeline(config);
    return result.report.converged ? 0 : 2;
}

} // namespace ellgrid

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"
#include "ellgrid/operators.hpp"
#include "ellgrid/writers_fmt.hpp"

namespace ellgrid {

struct SolverConfig {
    double omega = 1.90;
    double tolerance = 1.0e-4;
    std::size_t max_iter = 100;
    bool use_control = true;
    /// Re-derive the control field from the (static) parameter grid every
    /// iteration instead of once up front. Same values, reference behaviour.
    bool recompute_control_each_iter = false;
};

struct ConvergenceReport {
    std::size_t iterations = 0;
    std::vector<double> residuals;
    bool converged = false;
};

namespace detail {

struct NodeUpdate {
    double x;
    double y;
};

/// Candidate values rhs/lhs for one interior node, evaluated on the grid's
/// current (possibly mid-sweep) state. Everything a node update needs is
/// read before either coordinate is written, so the x write cannot leak
/// into the y update of the same node.
inline NodeUpdate relaxed_target(const StructuredGrid& g, const ControlSample& ctrl,
                                 std::size_t i, std::size_t j, GridSpacing sp) {
    const auto [g11, g22, g12] = metric_coefficients(g, i, j, sp);
    const ScalarField xs = g.xs();
    const ScalarField ys = g.ys();
    const double x_xi = d_xi(xs, i, j, sp);
    const double x_eta = d_eta(xs, i, j, sp);
    const double y_xi = d_xi(ys, i, j, sp);
    const double y_eta = d_eta(ys, i, j, sp);
    const double x_xieta = d_xieta(xs, i, j, sp);
    const double y_xieta = d_xieta(ys, i, j, sp);

    // P and Q of the elliptic system, assembled from the control vectors
    // and the current metrics.
    const double p_coef = g22 * ctrl.p11[0] - 2.0 * g12 * ctrl.p12[0] + g11 * ctrl.p22[0];
    const double q_coef = g22 * ctrl.p11[1] - 2.0 * g12 * ctrl.p12[1] + g11 * ctrl.p22[1];
    const double adapt_x = p_coef * x_xi + q_coef * x_eta;
    const double adapt_y = p_coef * y_xi + q_coef * y_eta;

    const double inv_dxi2 = 1.0 / (sp.del_xi * sp.del_xi);
    const double inv_deta2 = 1.0 / (sp.del_eta * sp.del_eta);
    const double lhs = 2.0 * (g22 * inv_dxi2 + g11 * inv_deta2);
    if (lhs == 0.0) {
        throw DegenerateCellError("zero metric coefficients at node (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    }
    const double rhs_x = g22 * (g.x(i + 1, j) + g.x(i - 1, j)) * inv_dxi2 +
                         g11 * (g.x(i, j + 1) + g.x(i, j - 1)) * inv_deta2 -
                         2.0 * g12 * x_xieta + adapt_x;
    const double rhs_y = g22 * (g.y(i + 1, j) + g.y(i - 1, j)) * inv_dxi2 +
                         g11 * (g.y(i, j + 1) + g.y(i, j - 1)) * inv_deta2 -
                         2.0 * g12 * y_xieta + adapt_y;
    return {rhs_x / lhs, rhs_y / lhs};
}

} // namespace detail

/// One point-SOR pass over the interior, j outer and i inner, newest values
/// used immediately (Gauss-Seidel order). Each node moves by
/// omega * (target - current); boundary nodes never move.
inline void sor_sweep(StructuredGrid& physical, const ControlField& control, GridSpacing sp,
                      double omega) {
    if (control.nx() != physical.nx() || control.ny() != physical.ny()) {
        throw DimensionError("sor_sweep: control field shape does not match the grid");
    }
    for (std::size_t j = 1; j + 1 < physical.ny(); ++j) {
        for (std::size_t i = 1; i + 1 < physical.nx(); ++i) {
            const auto target = detail::relaxed_target(physical, control.at(i, j), i, j, sp);
            physical.x(i, j) += omega * (target.x - physical.x(i, j));
            physical.y(i, j) += omega * (target.y - physical.y(i, j));
        }
    }
}

/// Max-norm defect of the discrete equations: how far each interior node
/// sits from its own relaxed target. Zero means the grid already satisfies
/// the discretized system. Diagnostic only; termination uses the
/// inter-iteration mesh change.
inline double discrete_equation_residual(const StructuredGrid& grid, const ControlField& control,
                                         GridSpacing sp) {
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < grid.ny(); ++j) {
        for (std::size_t i = 1; i + 1 < grid.nx(); ++i) {
            const auto target = detail::relaxed_target(grid, control.at(i, j), i, j, sp);
            worst = std::max(worst, std::abs(target.x - grid.x(i, j)));
            worst = std::max(worst, std::abs(target.y - grid.y(i, j)));
        }
    }
    return worst;
}

/// Relax the physical grid until the normalized inter-iteration mesh change
/// drops to the tolerance or the iteration cap is hit. The parameter grid
/// supplies the control field (all zeros when cfg.use_control is false).
inline std::pair<StructuredGrid, ConvergenceReport> solve(StructuredGrid physical,
                                                          const StructuredGrid& param,
                                                          const SolverConfig& cfg) {
    if (!physical.same_shape(param)) {
        throw DimensionError("solve: physical and parameter grids differ in shape");
    }
    if (!(cfg.omega > 0.0 && cfg.omega < 2.0)) {
        throw ParameterError("solve: omega must lie in (0,2), got " + std::to_string(cfg.omega));
    }
    if (cfg.max_iter < 1) {
        throw ParameterError("solve: max_iter must be at least 1");
    }

    const std::size_t nx = physical.nx();
    const std::size_t ny = physical.ny();
    const GridSpacing sp = physical.spacing();
    const double interior_count = static_cast<double>((nx - 2) * (ny - 2));

    ControlField control = cfg.use_control ? ControlField::compute(param)
                                           : ControlField::zeros(nx, ny);

    ConvergenceReport report;
    double residual = std::numeric_limits<double>::infinity();
    while (report.iterations < cfg.max_iter && residual > cfg.tolerance) {
        ++report.iterations;
        if (cfg.use_control && cfg.recompute_control_each_iter) {
            control = ControlField::compute(param);
        }
        const StructuredGrid before = physical;
        sor_sweep(physical, control, sp, cfg.omega);
        if (!physical.all_finite()) {
            throw DivergenceError("relaxation produced non-finite coordinates at iteration " +
                                  std::to_string(report.iterations));
        }
        residual = mesh_change_norm(physical, before) / interior_count;
        report.residuals.push_back(residual);
    }
    report.converged = !report.residuals.empty() && report.residuals.back() <= cfg.tolerance;
    return {std::move(physical), report};
}

/// One line per iteration: index, whitespace, normalized mesh change.
inline void residual_log(const ConvergenceReport& report, std::ostream& out) {
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
        out << (k + 1) << "         " << fmt::shortest(report.residuals[k]) << '\n';
    }
}

} // namespace ellgrid

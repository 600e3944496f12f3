#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"

namespace ellgrid {

namespace detail {

inline void require_interior(const ScalarField& f, std::size_t i, std::size_t j) {
    if (i < 1 || i > f.nx() - 2 || j < 1 || j > f.ny() - 2) {
        throw StencilError("9-point stencil does not fit at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
}

} // namespace detail

// Second-order central differences on a uniform computational grid.

inline double d_xi(const ScalarField& f, std::size_t i, std::size_t j, GridSpacing sp) {
    detail::require_interior(f, i, j);
    return (f(i + 1, j) - f(i - 1, j)) / (2.0 * sp.del_xi);
}

inline double d_eta(const ScalarField& f, std::size_t i, std::size_t j, GridSpacing sp) {
    detail::require_interior(f, i, j);
    return (f(i, j + 1) - f(i, j - 1)) / (2.0 * sp.del_eta);
}

inline double d_xixi(const ScalarField& f, std::size_t i, std::size_t j, GridSpacing sp) {
    detail::require_interior(f, i, j);
    return (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) / (sp.del_xi * sp.del_xi);
}

inline double d_etaeta(const ScalarField& f, std::size_t i, std::size_t j, GridSpacing sp) {
    detail::require_interior(f, i, j);
    return (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) / (sp.del_eta * sp.del_eta);
}

inline double d_xieta(const ScalarField& f, std::size_t i, std::size_t j, GridSpacing sp) {
    detail::require_interior(f, i, j);
    return (f(i + 1, j + 1) + f(i - 1, j - 1) - f(i - 1, j + 1) - f(i + 1, j - 1)) /
           (4.0 * sp.del_xi * sp.del_eta);
}

/// Metric tensor entries of the mapping at an interior node:
/// g11 = x_xi^2 + y_xi^2, g22 = x_eta^2 + y_eta^2, g12 = x_xi*x_eta + y_xi*y_eta.
struct MetricCoefficients {
    double g11;
    double g22;
    double g12;
};

inline MetricCoefficients metric_coefficients(const StructuredGrid& grid, std::size_t i,
                                              std::size_t j, GridSpacing sp) {
    const ScalarField xs = grid.xs();
    const ScalarField ys = grid.ys();
    const double x_xi = d_xi(xs, i, j, sp);
    const double x_eta = d_eta(xs, i, j, sp);
    const double y_xi = d_xi(ys, i, j, sp);
    const double y_eta = d_eta(ys, i, j, sp);
    return {x_xi * x_xi + y_xi * y_xi, x_eta * x_eta + y_eta * y_eta,
            x_xi * x_eta + y_xi * y_eta};
}

/// Tolerance below which the parameter-map Jacobian counts as singular.
inline constexpr double jacobian_det_tol = 1e-14;

/// First derivatives of the parameter coordinates (s,t) with respect to
/// (xi,eta). With (s,t) stored as the parameter grid's (x,y), this is the
/// Jacobian of the computational-to-parameter map.
struct JacobianT {
    double s_xi;
    double s_eta;
    double t_xi;
    double t_eta;

    [[nodiscard]] double det() const { return s_xi * t_eta - t_xi * s_eta; }
};

inline JacobianT jacobian_T(const StructuredGrid& param, std::size_t i, std::size_t j,
                            GridSpacing sp) {
    const ScalarField ss = param.xs();
    const ScalarField ts = param.ys();
    const JacobianT T{d_xi(ss, i, j, sp), d_eta(ss, i, j, sp), d_xi(ts, i, j, sp),
                      d_eta(ts, i, j, sp)};
    if (std::abs(T.det()) < jacobian_det_tol) {
        throw SingularMapError("parameter map is singular at (" + std::to_string(i) + "," +
                               std::to_string(j) + "), det = " + std::to_string(T.det()));
    }
    return T;
}

/// The three control vectors at one interior node of the parameter grid.
/// p12 stands for both mixed vectors (they are equal by symmetry).
struct ControlSample {
    std::array<double, 2> p11{0.0, 0.0};
    std::array<double, 2> p22{0.0, 0.0};
    std::array<double, 2> p12{0.0, 0.0};
};

/// Control vectors -T^{-1} (s_ab, t_ab)^T for ab in {xi xi, eta eta, xi eta},
/// with T^{-1} the explicit adjugate-over-determinant inverse. For grids
/// sampled from affine maps all second differences vanish, so every vector
/// is exactly zero.
inline ControlSample control_vectors(const StructuredGrid& param, std::size_t i, std::size_t j,
                                     GridSpacing sp) {
    const JacobianT T = jacobian_T(param, i, j, sp);
    const double det = T.det();
    const double inv00 = T.t_eta / det;
    const double inv01 = -T.s_eta / det;
    const double inv10 = -T.t_xi / det;
    const double inv11 = T.s_xi / det;

    const ScalarField ss = param.xs();
    const ScalarField ts = param.ys();
    const double s_xixi = d_xixi(ss, i, j, sp);
    const double s_etaeta = d_etaeta(ss, i, j, sp);
    const double s_xieta = d_xieta(ss, i, j, sp);
    const double t_xixi = d_xixi(ts, i, j, sp);
    const double t_etaeta = d_etaeta(ts, i, j, sp);
    const double t_xieta = d_xieta(ts, i, j, sp);

    ControlSample sample;
    sample.p11 = {-(inv00 * s_xixi + inv01 * t_xixi), -(inv10 * s_xixi + inv11 * t_xixi)};
    sample.p22 = {-(inv00 * s_etaeta + inv01 * t_etaeta), -(inv10 * s_etaeta + inv11 * t_etaeta)};
    sample.p12 = {-(inv00 * s_xieta + inv01 * t_xieta), -(inv10 * s_xieta + inv11 * t_xieta)};
    return sample;
}

/// Control vectors cached at every interior node of a parameter grid.
/// The parameter grid never changes during a solve, so one evaluation
/// serves every relaxation sweep.
class ControlField {
public:
    static ControlField compute(const StructuredGrid& param) {
        ControlField field(param.nx(), param.ny());
        const GridSpacing sp = param.spacing();
        for (std::size_t j = 1; j + 1 < param.ny(); ++j) {
            for (std::size_t i = 1; i + 1 < param.nx(); ++i) {
                field.samples_[field.offset(i, j)] = control_vectors(param, i, j, sp);
            }
        }
        return field;
    }

    /// All-zero field of the given shape: the pure smoothing (no adaptation) limit.
    static ControlField zeros(std::size_t nx, std::size_t ny) { return ControlField(nx, ny); }

    [[nodiscard]] std::size_t nx() const { return nx_; }
    [[nodiscard]] std::size_t ny() const { return ny_; }

    /// Sample at interior node (i,j); 1 <= i <= nx-2, 1 <= j <= ny-2.
    [[nodiscard]] const ControlSample& at(std::size_t i, std::size_t j) const {
        if (i < 1 || i > nx_ - 2 || j < 1 || j > ny_ - 2) {
            throw IndexError("control sample requested at non-interior node (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
        }
        return samples_[offset(i, j)];
    }

private:
    ControlField(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
        if (nx < 3 || ny < 3) {
            throw DimensionError("ControlField: dimensions must be at least 3x3");
        }
        samples_.resize((nx - 2) * (ny - 2));
    }

    [[nodiscard]] std::size_t offset(std::size_t i, std::size_t j) const {
        return (i - 1) + (j - 1) * (nx_ - 2);
    }

    std::size_t nx_;
    std::size_t ny_;
    std::vector<ControlSample> samples_;
};

/// Smallest cell Jacobian x_xi*y_eta - y_xi*x_eta over the interior nodes.
/// Positive everywhere means the mesh is free of fold-over.
inline double min_interior_jacobian(const StructuredGrid& grid) {
    const GridSpacing sp = grid.spacing();
    const ScalarField xs = grid.xs();
    const ScalarField ys = grid.ys();
    double min_det = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j + 1 < grid.ny(); ++j) {
        for (std::size_t i = 1; i + 1 < grid.nx(); ++i) {
            const double det = d_xi(xs, i, j, sp) * d_eta(ys, i, j, sp) -
                               d_xi(ys, i, j, sp) * d_eta(xs, i, j, sp);
            min_det = std::min(min_det, det);
        }
    }
    return min_det;
}

} // namespace ellgrid

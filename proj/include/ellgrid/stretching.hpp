#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"

namespace ellgrid {

enum class Axis { X, Y };

/// Compress node spacing towards the interior line c = eta0.
struct NearLineCluster {
    double eta0;
    double alpha = 3.0;
};

/// Compress node spacing towards the two interior lines c = eta1 and c = eta2.
/// The stretch factor is fixed at 3 inside the blend (alpha is carried for
/// interface parity but does not enter the mapping).
struct TwoLinesCluster {
    double eta1;
    double eta2;
    double alpha = 5.0;
};

/// Compress node spacing towards both ends of the axis; eta1 splits the
/// two one-sided stretches.
struct BoundaryCluster {
    double eta1;
    double alpha = 4.0;
};

using ClusterFamily = std::variant<NearLineCluster, TwoLinesCluster, BoundaryCluster>;

/// One clustering pass over a parameter-space grid: which family, applied
/// to which coordinate axis.
struct ClusterSpec {
    Axis axis;
    ClusterFamily family;
};

/// One-sided exponential stretch: h*(e^{alpha*eta}-1)/(e^{alpha}-1).
/// Strictly increasing on [0,1], maps 0 -> 0 and 1 -> h. Requires alpha > 0.
inline double eriksson(double eta, double alpha, double h) {
    return h * ((std::exp(alpha * eta) - 1.0) / (std::exp(alpha) - 1.0));
}

namespace detail {

inline void require_interior_knot(double knot, const char* name) {
    if (!(knot > 0.0 && knot < 1.0)) {
        throw ParameterError(std::string(name) + " must lie strictly inside (0,1), got " +
                             std::to_string(knot));
    }
}

inline void require_positive_alpha(double alpha) {
    if (!(alpha > 0.0)) {
        throw ParameterError("stretch factor alpha must be positive, got " +
                             std::to_string(alpha));
    }
}

} // namespace detail

/// Scalar map of the near-line family. Branches join continuously at eta0,
/// which is a fixed point; 0 and 1 are fixed exactly.
inline double cluster_near_line_map(double c, const NearLineCluster& spec) {
    detail::require_interior_knot(spec.eta0, "eta0");
    detail::require_positive_alpha(spec.alpha);
    const double eta0 = spec.eta0;
    const double alpha = spec.alpha;
    const double ea = std::exp(alpha);
    if (c < eta0) {
        return eta0 * (ea - std::exp(alpha * (1.0 - c / eta0))) / (ea - 1.0);
    }
    if (c > eta0) {
        return eta0 + (1.0 - eta0) * (std::exp(alpha * (c - eta0) / (1.0 - eta0)) - 1.0) / (ea - 1.0);
    }
    return c;
}

/// Scalar map of the two-lines family with midpoint knot eta0 = (eta1+eta2)/2.
/// Each branch reuses the alpha=3 stretch; all four agree at the knots.
inline double cluster_two_lines_map(double c, const TwoLinesCluster& spec) {
    detail::require_interior_knot(spec.eta1, "eta1");
    detail::require_interior_knot(spec.eta2, "eta2");
    if (!(spec.eta1 < spec.eta2)) {
        throw ParameterError("two-lines clustering requires eta1 < eta2");
    }
    const double eta1 = spec.eta1;
    const double eta2 = spec.eta2;
    const double eta0 = (eta1 + eta2) * 0.5;
    const auto blend = [](double t) { return eriksson(t, 3.0, 1.0); };
    // Branches are tested last-first so that a knot value is mapped by the
    // later of the two branches meeting there (they agree at every knot).
    if (c >= eta2) {
        return eta2 + (1.0 - eta2) * blend((c - eta2) / (1.0 - eta2));
    }
    if (c >= eta0) {
        return eta0 + (eta2 - eta0) * (1.0 - blend((eta2 - c) / (eta2 - eta0)));
    }
    if (c >= eta1) {
        return eta1 + (eta0 - eta1) * blend((c - eta1) / (eta0 - eta1));
    }
    return eta1 * (1.0 - blend(1.0 - c / eta1));
}

/// Scalar map of the boundary family: spacing contracts towards both
/// c = 0 and c = 1, with the crossover at eta1.
inline double cluster_boundary_map(double c, const BoundaryCluster& spec) {
    detail::require_interior_knot(spec.eta1, "eta1");
    detail::require_positive_alpha(spec.alpha);
    const double eta1 = spec.eta1;
    const double alpha = spec.alpha;
    const double ea = std::exp(alpha);
    if (c >= eta1) {
        return 1.0 - (1.0 - eta1) * (std::exp(alpha * (1.0 - c) / (1.0 - eta1)) - 1.0) / (ea - 1.0);
    }
    return eta1 * (std::exp(alpha * c / eta1) - 1.0) / (ea - 1.0);
}

inline double cluster_map(double c, const ClusterFamily& family) {
    return std::visit([c](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, NearLineCluster>) return cluster_near_line_map(c, spec);
        else if constexpr (std::is_same_v<T, TwoLinesCluster>) return cluster_two_lines_map(c, spec);
        else return cluster_boundary_map(c, spec);
    }, family);
}

/// Remap one coordinate of every node of a parameter-space grid through the
/// chosen clustering family. The other coordinate is untouched.
inline StructuredGrid apply_cluster(StructuredGrid grid, const ClusterSpec& spec) {
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            if (spec.axis == Axis::X) {
                grid.x(i, j) = cluster_map(grid.x(i, j), spec.family);
            } else {
                grid.y(i, j) = cluster_map(grid.y(i, j), spec.family);
            }
        }
    }
    return grid;
}

} // namespace ellgrid

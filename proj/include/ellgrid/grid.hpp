#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ellgrid/errors.hpp"

namespace ellgrid {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Uniform computational-space step sizes of a logically rectangular grid.
struct GridSpacing {
    double del_xi;
    double del_eta;
};

/// Read-only view of an nx-by-ny scalar array, flattened as no = i + j*nx.
///
/// Used by the finite-difference operators so they work on grid coordinate
/// components and on arbitrary test fields alike.
class ScalarField {
public:
    ScalarField(std::span<const double> data, std::size_t nx, std::size_t ny)
        : data_(data), nx_(nx), ny_(ny) {
        if (data.size() != nx * ny) {
            throw DimensionError("ScalarField: data size does not match nx*ny");
        }
    }

    [[nodiscard]] std::size_t nx() const { return nx_; }
    [[nodiscard]] std::size_t ny() const { return ny_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i + j * nx_]; }

private:
    std::span<const double> data_;
    std::size_t nx_;
    std::size_t ny_;
};

/// Logically rectangular grid of 2D node coordinates.
///
/// The same type represents the computational, parameter, and physical
/// spaces; only the coordinate values differ. Nodes are stored flattened
/// with node number no = i + j*nx (row-major in i), the order the mesh
/// writers emit. Plain value type: copying snapshots the whole mesh.
class StructuredGrid {
public:
    /// Uniform grid over the unit square: node (i,j) = (i/(nx-1), j/(ny-1)).
    StructuredGrid(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
        if (nx < 3 || ny < 3) {
            throw DimensionError("StructuredGrid: dimensions must be at least 3x3, got " +
                                 std::to_string(nx) + "x" + std::to_string(ny));
        }
        x_.resize(nx * ny);
        y_.resize(nx * ny);
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t i = 0; i < nx; ++i) {
                const std::size_t no = flatten(i, j);
                x_[no] = static_cast<double>(i) / static_cast<double>(nx - 1);
                y_[no] = static_cast<double>(j) / static_cast<double>(ny - 1);
            }
        }
    }

    [[nodiscard]] std::size_t nx() const { return nx_; }
    [[nodiscard]] std::size_t ny() const { return ny_; }
    [[nodiscard]] std::size_t node_count() const { return nx_ * ny_; }

    [[nodiscard]] GridSpacing spacing() const {
        return {1.0 / static_cast<double>(nx_ - 1), 1.0 / static_cast<double>(ny_ - 1)};
    }

    [[nodiscard]] std::size_t flatten(std::size_t i, std::size_t j) const { return i + j * nx_; }

    [[nodiscard]] std::pair<std::size_t, std::size_t> unflatten(std::size_t no) const {
        return {no % nx_, no / nx_};
    }

    double& x(std::size_t i, std::size_t j) {
        check_index(i, j);
        return x_[flatten(i, j)];
    }
    double& y(std::size_t i, std::size_t j) {
        check_index(i, j);
        return y_[flatten(i, j)];
    }
    [[nodiscard]] double x(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return x_[flatten(i, j)];
    }
    [[nodiscard]] double y(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return y_[flatten(i, j)];
    }

    [[nodiscard]] Point2 node(std::size_t i, std::size_t j) const { return {x(i, j), y(i, j)}; }

    void set_node(std::size_t i, std::size_t j, Point2 p) {
        check_index(i, j);
        x_[flatten(i, j)] = p.x;
        y_[flatten(i, j)] = p.y;
    }

    [[nodiscard]] bool is_boundary(std::size_t i, std::size_t j) const {
        return i == 0 || i == nx_ - 1 || j == 0 || j == ny_ - 1;
    }

    /// Coordinates in flattened node order, as the writers consume them.
    [[nodiscard]] std::span<const double> x_flat() const { return x_; }
    [[nodiscard]] std::span<const double> y_flat() const { return y_; }

    [[nodiscard]] ScalarField xs() const { return {x_, nx_, ny_}; }
    [[nodiscard]] ScalarField ys() const { return {y_, nx_, ny_}; }

    [[nodiscard]] bool same_shape(const StructuredGrid& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_;
    }

    [[nodiscard]] bool all_finite() const {
        for (std::size_t no = 0; no < x_.size(); ++no) {
            if (!std::isfinite(x_[no]) || !std::isfinite(y_[no])) return false;
        }
        return true;
    }

    friend bool operator==(const StructuredGrid&, const StructuredGrid&) = default;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= nx_ || j >= ny_) {
            throw IndexError("node index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside " + std::to_string(nx_) + "x" + std::to_string(ny_) +
                             " grid");
        }
    }

    std::size_t nx_;
    std::size_t ny_;
    std::vector<double> x_;
    std::vector<double> y_;
};

/// Root-sum-square coordinate change between two same-shape grids, taken
/// over all nodes. Boundary terms vanish during relaxation because the
/// boundary is fixed. The solver, not this function, divides by the
/// interior node count.
inline double mesh_change_norm(const StructuredGrid& current, const StructuredGrid& previous) {
    if (!current.same_shape(previous)) {
        throw DimensionError("mesh_change_norm: grid dimensions differ");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < current.ny(); ++j) {
        for (std::size_t i = 0; i < current.nx(); ++i) {
            const double dx = current.x(i, j) - previous.x(i, j);
            const double dy = current.y(i, j) - previous.y(i, j);
            sum += dx * dx + dy * dy;
        }
    }
    return std::sqrt(sum);
}

} // namespace ellgrid

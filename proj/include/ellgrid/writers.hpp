#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>

#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"
#include "ellgrid/writers_fmt.hpp"

namespace ellgrid {

/// GMV ASCII flavours. PaperExact keeps the historical layout that omits
/// the z-coordinate block; ValidGmv inserts a zero z-block so standard GMV
/// readers accept the file. Everything else is byte-identical.
enum class GmvCompat { PaperExact, ValidGmv };

/// One quad cell's 1-based corner indices, counterclockwise for grids with
/// positive Jacobian: (n, n+1, n1+1, n1) with n = i + j*nx + 1 and
/// n1 = i + (j+1)*nx + 1.
struct QuadCell {
    std::size_t a, b, c, d;
};

inline QuadCell quad_cell(std::size_t i, std::size_t j, std::size_t nx) {
    const std::size_t n = i + j * nx + 1;
    const std::size_t n1 = i + (j + 1) * nx + 1;
    return {n, n + 1, n1 + 1, n1};
}

/// Structured mesh as GMV ASCII: node count, flattened x block, y block
/// (and the z block in ValidGmv mode), then one quad per cell.
inline void write_gmv(const StructuredGrid& grid, std::ostream& out,
                      GmvCompat compat = GmvCompat::ValidGmv) {
    const std::size_t nx = grid.nx();
    const std::size_t ny = grid.ny();
    out << "gmvinput ascii\n";
    out << "nodes  " << nx * ny << '\n';
    for (const double v : grid.x_flat()) {
        out << fmt::shortest(v) << "         ";
    }
    out << "\n\n";
    for (const double v : grid.y_flat()) {
        out << fmt::shortest(v) << "        ";
    }
    out << "\n\n";
    if (compat == GmvCompat::ValidGmv) {
        for (std::size_t no = 0; no < nx * ny; ++no) {
            out << "0        ";
        }
        out << "\n\n";
    }
    out << "cells  " << (nx - 1) * (ny - 1) << '\n';
    for (std::size_t j = 0; j + 1 < ny; ++j) {
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            const QuadCell cell = quad_cell(i, j, nx);
            out << "quad  4  \n";
            out << cell.a << "   " << cell.b << "   " << cell.c << "  " << cell.d << '\n';
        }
    }
    out << '\n';
    out << '\n' << "endgmv\n";
    if (!out) {
        throw Error("write_gmv: stream write failed");
    }
}

/// Matlab plotting script: per-node x1/y1 assignments, red boundary plots,
/// blue interior line loops, hold handling, axis off.
inline void write_matlab(const StructuredGrid& grid, std::ostream& out) {
    const std::size_t nx = grid.nx();
    const std::size_t ny = grid.ny();
    out << "clear;\n";
    out << "holdon=ishold;\n";
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            out << "x1(" << i + 1 << "," << j + 1 << ")=" << fmt::shortest(grid.x(i, j))
                << ";   "
                << "y1(" << i + 1 << "," << j + 1 << ")=" << fmt::shortest(grid.y(i, j))
                << ";\n";
        }
    }
    out << "m =  " << nx << '\n';
    out << "n =  " << ny << '\n';
    out << "plot(x1(1,:),y1(1,:),'r'); hold on\n";
    out << "plot(x1(m,:),y1(m,:),'r');\n";
    out << "plot(x1(:,1),y1(:,1),'r');\n";
    out << "plot(x1(:,n),y1(:,n),'r');\n";
    out << "% Plot internal grid lines\n";
    out << "for i=2:m-1, plot(x1(i,:),y1(i,:),'b'); end\n";
    out << "for j=2:n-1, plot(x1(:,j),y1(:,j),'b'); end\n";
    out << "if (~holdon), hold off, end\n";
    out << "axis off;\n";
    if (!out) {
        throw Error("write_matlab: stream write failed");
    }
}

struct SvgStyle {
    double width = 640.0;
    std::string boundary_color = "#c02020";
    std::string interior_color = "#3060c0";
    double boundary_stroke = 2.0;
    double interior_stroke = 1.0;
};

/// Mesh rendering as SVG 1.1: one polyline per grid row and per grid
/// column, viewBox fitted to the bounding box with a 2% margin, boundary
/// lines styled apart from interior ones. The y-axis is flipped so the
/// mesh appears in the usual orientation.
inline void write_svg(const StructuredGrid& grid, std::ostream& out, const SvgStyle& style = {}) {
    const std::size_t nx = grid.nx();
    const std::size_t ny = grid.ny();

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    for (std::size_t no = 0; no < grid.node_count(); ++no) {
        min_x = std::min(min_x, grid.x_flat()[no]);
        max_x = std::max(max_x, grid.x_flat()[no]);
        min_y = std::min(min_y, grid.y_flat()[no]);
        max_y = std::max(max_y, grid.y_flat()[no]);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    if (!(extent > 0.0)) {
        throw RenderError("write_svg: grid bounding box is degenerate");
    }
    const double margin = 0.02 * extent;
    const double box_w = (max_x - min_x) + 2.0 * margin;
    const double box_h = (max_y - min_y) + 2.0 * margin;

    const auto px = [&](double x) { return x - min_x + margin; };
    const auto py = [&](double y) { return max_y - y + margin; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt::shortest(style.width)
        << "\" height=\"" << fmt::shortest(style.width * box_h / box_w) << "\" viewBox=\"0 0 "
        << fmt::shortest(box_w) << " " << fmt::shortest(box_h) << "\">\n";

    const double stroke_scale = box_w / style.width;
    const auto polyline = [&](bool is_boundary, auto&& point_at, std::size_t count) {
        out << "  <polyline fill=\"none\" stroke=\""
            << (is_boundary ? style.boundary_color : style.interior_color) << "\" stroke-width=\""
            << fmt::shortest((is_boundary ? style.boundary_stroke : style.interior_stroke) *
                             stroke_scale)
            << "\" points=\"";
        for (std::size_t k = 0; k < count; ++k) {
            const Point2 p = point_at(k);
            if (k != 0) out << ' ';
            out << fmt::shortest(px(p.x)) << ',' << fmt::shortest(py(p.y));
        }
        out << "\"/>\n";
    };

    for (std::size_t j = 0; j < ny; ++j) {
        polyline(j == 0 || j == ny - 1, [&](std::size_t i) { return grid.node(i, j); }, nx);
    }
    for (std::size_t i = 0; i < nx; ++i) {
        polyline(i == 0 || i == nx - 1, [&](std::size_t j) { return grid.node(i, j); }, ny);
    }
    out << "</svg>\n";
    if (!out) {
        throw Error("write_svg: stream write failed");
    }
}

} // namespace ellgrid

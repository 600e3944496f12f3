#pragma once

#include <cmath>
#include <charconv>
#include <istream>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "ellgrid/errors.hpp"
#include "ellgrid/grid.hpp"

namespace ellgrid {

/// Circle of the given radius, traversed counterclockwise starting at (r,0).
struct CircleBoundary {
    double radius = 1.0;
};

/// Four explicit edge point lists in physical coordinates. Orientation:
/// south = zeta 0->1 at eta=0, east = eta 0->1 at zeta=1,
/// north = zeta 0->1 at eta=1, west = eta 0->1 at zeta=0.
/// Adjacent sides must share their corner point; side lengths must match
/// the target grid (south/north carry nx points, west/east carry ny).
struct PolylineBoundary {
    std::vector<Point2> south;
    std::vector<Point2> east;
    std::vector<Point2> north;
    std::vector<Point2> west;
};

using BoundarySpec = std::variant<CircleBoundary, PolylineBoundary>;

/// Image of a unit-square boundary point (zeta,eta) on the circle of the
/// given radius. Each square side maps to a quarter arc:
///   eta=0:  theta = (pi/2)*zeta
///   zeta=1: theta = pi/2 + (pi/2)*eta
///   eta=1:  theta = pi + (pi/2)*(1-zeta)
///   zeta=0: theta = 3*pi/2 + (pi/2)*(1-eta)
/// Sides are tested in that order, so corners take the earlier side's angle.
inline Point2 circle_boundary_point(double zeta, double eta, double radius) {
    constexpr double pi = std::numbers::pi;
    double theta = 0.0;
    if (eta == 0.0) {
        theta = pi / 2.0 * zeta;
    } else if (zeta == 1.0) {
        theta = pi / 2.0 + pi / 2.0 * eta;
    } else if (eta == 1.0) {
        theta = pi + pi / 2.0 * (1.0 - zeta);
    } else if (zeta == 0.0) {
        theta = 3.0 * pi / 2.0 + pi / 2.0 * (1.0 - eta);
    } else {
        throw Error("circle_boundary_point: (" + std::to_string(zeta) + "," +
                    std::to_string(eta) + ") is not on the unit-square boundary");
    }
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

namespace detail {

inline Point2 boundary_image(const BoundarySpec& spec, std::size_t i, std::size_t j,
                             std::size_t nx, std::size_t ny) {
    if (const auto* circle = std::get_if<CircleBoundary>(&spec)) {
        const double zeta = static_cast<double>(i) / static_cast<double>(nx - 1);
        const double eta = static_cast<double>(j) / static_cast<double>(ny - 1);
        return circle_boundary_point(zeta, eta, circle->radius);
    }
    const auto& poly = std::get<PolylineBoundary>(spec);
    // Corner rows/columns defer to south/north so all four sides are used
    // consistently; shared corners make the choice immaterial.
    if (j == 0) return poly.south[i];
    if (j == ny - 1) return poly.north[i];
    if (i == 0) return poly.west[j];
    return poly.east[j];
}

} // namespace detail

/// Replace every boundary node of the grid by the boundary image of its
/// uniform parameter (zeta = i/(nx-1), eta = j/(ny-1)). Interior untouched.
inline StructuredGrid apply_boundary(StructuredGrid grid, const BoundarySpec& spec) {
    const std::size_t nx = grid.nx();
    const std::size_t ny = grid.ny();
    if (const auto* poly = std::get_if<PolylineBoundary>(&spec)) {
        if (poly->south.size() != nx || poly->north.size() != nx ||
            poly->west.size() != ny || poly->east.size() != ny) {
            throw BoundaryError("polyline side point counts do not match the " +
                                std::to_string(nx) + "x" + std::to_string(ny) + " grid");
        }
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            if (grid.is_boundary(i, j)) {
                grid.set_node(i, j, detail::boundary_image(spec, i, j, nx, ny));
            }
        }
    }
    return grid;
}

/// Fill the interior by bilinear transfinite interpolation of the four
/// boundary curves. Boundary nodes are left bit-identical; the blend is
/// exact for boundaries sampled from bilinear maps.
inline StructuredGrid tfi_fill(StructuredGrid grid) {
    const std::size_t nx = grid.nx();
    const std::size_t ny = grid.ny();
    const StructuredGrid bd = grid;
    for (std::size_t j = 1; j + 1 < ny; ++j) {
        for (std::size_t i = 1; i + 1 < nx; ++i) {
            const double zeta = static_cast<double>(i) / static_cast<double>(nx - 1);
            const double eta = static_cast<double>(j) / static_cast<double>(ny - 1);
            grid.x(i, j) =
                (1.0 - zeta) * bd.x(0, j) + zeta * bd.x(nx - 1, j) +
                (1.0 - eta) * bd.x(i, 0) + eta * bd.x(i, ny - 1) -
                ((1.0 - zeta) * (1.0 - eta) * bd.x(0, 0) + zeta * (1.0 - eta) * bd.x(nx - 1, 0) +
                 zeta * eta * bd.x(nx - 1, ny - 1) + (1.0 - zeta) * eta * bd.x(0, ny - 1));
            grid.y(i, j) =
                (1.0 - zeta) * bd.y(0, j) + zeta * bd.y(nx - 1, j) +
                (1.0 - eta) * bd.y(i, 0) + eta * bd.y(i, ny - 1) -
                ((1.0 - zeta) * (1.0 - eta) * bd.y(0, 0) + zeta * (1.0 - eta) * bd.y(nx - 1, 0) +
                 zeta * eta * bd.y(nx - 1, ny - 1) + (1.0 - zeta) * eta * bd.y(0, ny - 1));
        }
    }
    return grid;
}

namespace detail {

inline bool points_close(Point2 a, Point2 b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

inline double parse_coordinate(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw BoundaryError("boundary CSV line " + std::to_string(line_no) +
                            ": cannot parse coordinate '" + std::string(text) + "'");
    }
    return value;
}

inline std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

/// Corner-closure tolerance for boundary CSV ingestion.
inline constexpr double polyline_corner_tol = 1e-12;

/// Parse a four-block boundary CSV: blocks headed `#south`, `#east`,
/// `#north`, `#west` in that order, one `x,y` pair per line, blank lines
/// ignored. Validates corner closure and, when expect_nx/expect_ny are
/// nonzero, the side point counts against the target grid.
inline PolylineBoundary load_boundary_polyline(std::istream& in, std::size_t expect_nx = 0,
                                               std::size_t expect_ny = 0) {
    static constexpr const char* headers[4] = {"#south", "#east", "#north", "#west"};
    std::vector<Point2> sides[4];
    int current = -1;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trimmed(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (current + 1 >= 4 || line != headers[current + 1]) {
                throw BoundaryError("boundary CSV line " + std::to_string(line_no) +
                                    ": unexpected block header '" + std::string(line) + "'");
            }
            ++current;
            continue;
        }
        if (current < 0) {
            throw BoundaryError("boundary CSV line " + std::to_string(line_no) +
                                ": point before the first block header");
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw BoundaryError("boundary CSV line " + std::to_string(line_no) +
                                ": expected 'x,y'");
        }
        const double px = detail::parse_coordinate(detail::trimmed(line.substr(0, comma)), line_no);
        const double py = detail::parse_coordinate(detail::trimmed(line.substr(comma + 1)), line_no);
        sides[current].push_back({px, py});
    }
    if (current != 3) {
        throw BoundaryError("boundary CSV: expected all four side blocks, found " +
                            std::to_string(current + 1));
    }
    for (int s = 0; s < 4; ++s) {
        if (sides[s].size() < 2) {
            throw BoundaryError(std::string("boundary CSV: side ") + headers[s] +
                                " needs at least 2 points");
        }
    }

    PolylineBoundary poly{sides[0], sides[1], sides[2], sides[3]};
    if (sides[0].size() != sides[2].size() || sides[1].size() != sides[3].size()) {
        throw BoundaryError("boundary CSV: south/north and east/west point counts must match");
    }
    if (expect_nx != 0 && sides[0].size() != expect_nx) {
        throw BoundaryError("boundary CSV: south/north have " +
                            std::to_string(sides[0].size()) + " points but the grid needs " +
                            std::to_string(expect_nx));
    }
    if (expect_ny != 0 && sides[1].size() != expect_ny) {
        throw BoundaryError("boundary CSV: east/west have " + std::to_string(sides[1].size()) +
                            " points but the grid needs " + std::to_string(expect_ny));
    }

    const auto check_corner = [](Point2 a, Point2 b, const char* where) {
        if (!detail::points_close(a, b, polyline_corner_tol)) {
            throw BoundaryError(std::string("boundary CSV: open loop at the ") + where +
                                " corner");
        }
    };
    check_corner(poly.south.front(), poly.west.front(), "south-west");
    check_corner(poly.south.back(), poly.east.front(), "south-east");
    check_corner(poly.east.back(), poly.north.back(), "north-east");
    check_corner(poly.north.front(), poly.west.back(), "north-west");
    return poly;
}

} // namespace ellgrid

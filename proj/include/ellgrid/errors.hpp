#pragma once

#include <stdexcept>
#include <string>

namespace ellgrid {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grid dimension below the 3x3 minimum, or two grids of different shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Node index outside [0,nx) x [0,ny).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Stencil applied at a node whose 9-point neighbourhood leaves the grid.
class StencilError : public Error {
public:
    using Error::Error;
};

/// Bad boundary data: parse failure, open corner loop, or side/grid count mismatch.
class BoundaryError : public Error {
public:
    using Error::Error;
};

/// Clustering knot or stretch factor outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Parameter-space map has a (numerically) singular Jacobian at some node.
class SingularMapError : public Error {
public:
    using Error::Error;
};

/// Metric coefficients vanished; the relaxation update is undefined.
class DegenerateCellError : public Error {
public:
    using Error::Error;
};

/// Non-finite coordinates appeared during relaxation.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Output cannot be rendered (e.g. degenerate bounding box).
class RenderError : public Error {
public:
    using Error::Error;
};

/// Command line could not be turned into a valid run configuration.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace ellgrid

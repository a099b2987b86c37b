#pragma once

#include <stdexcept>
#include <string>

namespace shellga {

// Parametrization collapsed: det(G_ij) below the meaningful threshold.
struct DegenerateFrame : std::runtime_error {
    explicit DegenerateFrame(const std::string& what) : std::runtime_error(what) {}
};

// Coordinates outside the chart's parameter rectangle (including the margin
// needed by finite-difference stencils).
struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

// Motion reverses or destroys the surface orientation (det F <= 0).
struct OrientationReversed : std::runtime_error {
    explicit OrientationReversed(const std::string& what) : std::runtime_error(what) {}
};

// A divergence stencil would leave the chart domain.
struct StencilOutOfDomain : std::runtime_error {
    explicit StencilOutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigInvalid : std::runtime_error {
    explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shellga

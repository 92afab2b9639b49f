// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace becdeph {

// An adaptive quadrature ran out of panel budget before meeting tolerance.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Root finder was handed an interval that does not bracket a sign change.
struct NoBracket : std::runtime_error {
    explicit NoBracket(const std::string& what) : std::runtime_error(what) {}
};

// Asked for interacting-regime asymptotics of a non-interacting reservoir.
struct InvalidRegime : std::invalid_argument {
    explicit InvalidRegime(const std::string& what) : std::invalid_argument(what) {}
};

// Log-log slope fit received non-positive samples (e.g. L = 0 kills the coupling).
struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& what) : std::runtime_error(what) {}
};

// Fisher-information denominator came out negative beyond roundoff; the
// state/dephasing pair is inconsistent.
struct NegativeDenominator : std::runtime_error {
    explicit NegativeDenominator(const std::string& what) : std::runtime_error(what) {}
};

} // namespace becdeph

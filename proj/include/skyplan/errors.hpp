// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace skyplan {

/// Raised by the configuration loader: parse failures, unknown keys,
/// or invariant violations (the message names the offending key).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a beam geometry has no ground intersection (grazing or
/// above-horizon angles) or a fixed-point width solve does not converge.
struct infeasible_geometry : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when an adaptive integral exceeds its evaluation budget or
/// subdivision limit; `level` names the integration variable that failed.
struct quadrature_error : std::runtime_error {
    std::string level;
    quadrature_error(const std::string& lvl, const std::string& what)
        : std::runtime_error(what), level(lvl) {}
};

}  // namespace skyplan

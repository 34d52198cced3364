#pragma once

#include <string>
#include <vector>

#include "fracsolve/problem/problem.hpp"

namespace fracsolve {

enum class CheckStatus { Pass, Warn, Info };

struct ValidationEntry {
    std::string hypothesis;  ///< "h1", "h2", ...
    CheckStatus status = CheckStatus::Pass;
    std::string message;

    friend bool operator==(const ValidationEntry&, const ValidationEntry&) = default;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;

    /// Warn if any entry warns; Info entries never change the outcome.
    CheckStatus overall() const;
    bool has_warning(std::string_view hypothesis) const;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Sampled checks of the structural hypotheses. Reports, never throws on a
/// violated hypothesis:
///   h1  order chain nu_1 < ... < nu_M < nu, mu_1 < ... < mu_N < nu, nu_i != mu_j;
///       the Hölder-dependent bound nu_i, mu_j < nu (2 - alpha)/2 is reported as
///       information at alpha = 1, together with the horizon up to which
///       N(t; nu, mu_j) stays nonnegative
///   h2  a, rho0, rho_i, gamma_j positive on the sample grid
///   h3  rho0, rho_i, gamma_j nondecreasing in t; rho0 - sum gamma_j positive and nondecreasing
///   h4  kernel exponent beta <= 1 - nu
///   h6  growth classes of f (documented only)
///   h7  initial data compatible with the boundary conditions
/// plus agreement of the exact solution with u0 when one is present.
ValidationReport validate_hypotheses(const ProblemSpec& problem, int samples_per_axis = 21);

std::string to_string(CheckStatus status);

}  // namespace fracsolve

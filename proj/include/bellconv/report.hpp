#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bellconv/rational.hpp"

namespace bellconv {

// A sample excluded because a denominator vanishes there.
struct SkippedPole {
    std::optional<unsigned> l;
    std::optional<unsigned> m;
    Rational value; // the excluded tau (or lambda)

    std::string to_string() const;
};

/**
 * Result of checking one identity at one parameter point.
 * `pass` is exactly `lhs == rhs`.
 */
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    Rational lhs;
    Rational rhs;
    bool pass = false;
    std::vector<SkippedPole> skipped_poles;

    IdentityReport() = default;
    IdentityReport(std::string name, std::vector<std::pair<std::string, std::string>> parameters, Rational l,
                   Rational r)
        : identity(std::move(name)), params(std::move(parameters)), lhs(std::move(l)), rhs(std::move(r)),
          pass(lhs == rhs)
    {
    }

    nlohmann::ordered_json to_json() const;
};

/**
 * Exact evaluation of an identity at enough distinct points of a free
 * parameter that, both sides being polynomials of degree at most
 * `degree_bound` in it (after clearing linear denominators), agreement
 * at every sample proves the identity for all parameter values.
 */
struct Certificate {
    std::string identity;
    std::string parameter;
    int degree_bound = 0;
    std::vector<IdentityReport> samples;
    std::vector<SkippedPole> skipped_poles;

    bool all_pass() const;
    // all_pass() and at least degree_bound + 1 distinct samples.
    bool certified() const;

    // The summary record of a batch.
    nlohmann::ordered_json summary_json() const;
};

nlohmann::ordered_json to_json(const std::vector<Rational>& values);

// One CSV row per report, with a header line.
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

// Small helpers for building parameter records.
std::string format_params(const std::vector<unsigned>& v);

} // namespace bellconv

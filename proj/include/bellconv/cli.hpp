#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellconv/sequence.hpp"

namespace bellconv::cli {

// Bad flags or unreadable input; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Resolves a --x argument. Keywords: "ones", "factorials" (x_j = (j-1)!),
 * "identity-j" (x_j = j) and "random" (needs a seed and n_max); anything
 * else is read as a JSON file holding an array of rational strings.
 * Keywords produce `length` entries, or n_max when given.
 */
Sequence load_sequence(const std::string& source, std::size_t length, std::optional<unsigned> n_max,
                       std::optional<std::uint64_t> seed);

/**
 * Runs one command line (without the program name). Output goes to `out`,
 * diagnostics to `err`. Returns 0 on success, 1 when an identity check
 * fails, 2 on usage or input errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bellconv::cli

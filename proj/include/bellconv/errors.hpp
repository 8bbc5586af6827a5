#pragma once

#include <stdexcept>
#include <string>

namespace bellconv {

// A sequence was indexed past its last entry.
class SequenceTooShort : public std::out_of_range {
public:
    SequenceTooShort(std::size_t needed, std::size_t available)
        : std::out_of_range("sequence too short: need " + std::to_string(needed) + " entries, have "
                            + std::to_string(available)),
          needed_(needed), available_(available)
    {
    }

    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_;
    std::size_t available_;
};

// A denominator of the checked expression vanishes. `where` names the offending sample.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& where)
        : std::domain_error("pole in denominator at " + where), where_(where)
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// Arguments outside the documented range of an operation.
class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bellconv

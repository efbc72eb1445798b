#ifndef STAIRCASE_IDEAL_IO_HPP
#define STAIRCASE_IDEAL_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "staircase/ideal.hpp"

namespace staircase {

/// Malformed ideal document. `line` and `column` are 1-based and refer to
/// the position where parsing failed.
class IdealParseError : public std::runtime_error {
public:
    IdealParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the ideal file format: one JSON array of two-element arrays of
/// nonnegative integers, e.g. [[50,0],[40,10],[0,50]]. Input order is
/// irrelevant; the result is minimalized. Throws IdealParseError.
StaircaseIdeal parse_ideal(std::string_view text);

/// Serializes in the same format, generators in canonical order,
/// e.g. "[[50,0],[40,10],[0,50]]". Byte-stable for equal ideals.
std::string format_ideal(const StaircaseIdeal& ideal);

/// File variants. Throw std::runtime_error on I/O failure and
/// IdealParseError on malformed content.
StaircaseIdeal load_ideal_file(const std::string& path);
void save_ideal_file(const std::string& path, const StaircaseIdeal& ideal);

/// "x^50", "x^40 y^10", "y", "1": the staircase notation used by the
/// human-readable CLI output.
std::string monomial_to_string(Monomial u);

/// Comma-separated generator list in staircase notation.
std::string ideal_to_string(const StaircaseIdeal& ideal);

} // namespace staircase

#endif

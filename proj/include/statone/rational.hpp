#ifndef STATONE_RATIONAL_HPP
#define STATONE_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace statone {

/// Exact rational scalar. Every quantity in this library (element values,
/// state weights, vertex values) is a Rat; no floating point exists anywhere.
using Rat = boost::rational<std::int64_t>;

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

/// Canonical "p/q" form in lowest terms, denominator always present
/// ("0/1", "1/1", "2/3"). Stable across parse/print round trips.
std::string format_rational(const Rat& r);

} // namespace statone

#endif

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lzp {

using Rational = mpq_class;

/// Parses "p/q" or "p" (decimal integers only). Throws lzp::Error(BadInput).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer value; caller guarantees is_integer(q) and that it fits in a long.
long to_long(const Rational& q);

std::size_t hash_value(const Rational& q);

}  // namespace lzp

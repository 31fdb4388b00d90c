#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace x33 {

// Exact rational scalar used everywhere; always stored in canonical
// (reduced, positive-denominator) form.
using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized construction from machine integers.
Rat rat(long num, long den = 1);

// Parses "n", "-n", "n/d" (whitespace-trimmed). Throws std::invalid_argument.
Rat rat_parse(std::string_view s);

// Canonical printing: "n" when the denominator is 1, else "n/d".
std::string rat_str(const Rat& r);

// floor(r) as a long; throws std::overflow_error if it does not fit.
long rat_floor_long(const Rat& r);

// 64-bit FNV-1a of a byte string, and its fixed-width hex form.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

}  // namespace x33

#pragma once

#include <gmpxx.h>

#include <string>

namespace conewalls {

using Int = mpz_class;
using Rat = mpq_class;

/// Largest integer <= q.
Int rat_floor(const Rat& q);

/// Smallest integer >= q.
Int rat_ceil(const Rat& q);

/// Largest integer strictly less than q.
Int rat_strict_floor(const Rat& q);

/// Floor of sqrt(n) for n >= 0.
Int isqrt_floor(const Int& n);

/// Largest integer m >= 0 with m*m <= q.  Requires q >= 0.
Int rat_sqrt_floor(const Rat& q);

/// Largest integer t with t <= c + sqrt(r).  Requires r >= 0.
Int floor_add_sqrt(const Rat& c, const Rat& r);

/// Smallest integer t with t >= c - sqrt(r).  Requires r >= 0.
Int ceil_sub_sqrt(const Rat& c, const Rat& r);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator
/// is one.
std::string rat_to_string(const Rat& q);

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace conewalls

#pragma once

#include <span>

#include "tdkit/rat.hpp"

namespace tdkit {

/// Symmetric q-integer [i]_q with q = p^2:  (p^i - p^-i) / (p - p^-1).
/// Throws std::domain_error for p in {0, 1, -1}.
Rat q_bracket(long i, const Rat& p);

/// Terminating Gauss sum 2F1(-i, -j; -d; 2). Requires 0 <= i, j <= d and d >= 1;
/// throws std::invalid_argument otherwise.
Rat hyp2f1_z2(long i, long j, long d);

/// (a; q)_n = prod_{k<n} (1 - a q^k).
Rat q_pochhammer(const Rat& a, const Rat& q, long n);

/// Rising factorial (a)_n.
Rat pochhammer(const Rat& a, long n);

Rat binomial(long n, long k);

/// Terminating generalized hypergeometric sum
///   sum_{k=0}^{terms-1} prod (upper)_k / (prod (lower)_k * k!) * z^k.
/// Throws std::domain_error if a lower Pochhammer vanishes inside the range.
Rat hypergeometric_sum(std::span<const Rat> upper, std::span<const Rat> lower, const Rat& z,
                       long terms);

/// Terminating basic hypergeometric sum in the r+1 phi r normalization
///   sum_{k=0}^{terms-1} prod (upper;q)_k / (prod (lower;q)_k * (q;q)_k) * z^k.
/// Throws std::domain_error if a lower q-Pochhammer vanishes inside the range.
Rat basic_hypergeometric_sum(std::span<const Rat> upper, std::span<const Rat> lower, const Rat& q,
                             const Rat& z, long terms);

} // namespace tdkit

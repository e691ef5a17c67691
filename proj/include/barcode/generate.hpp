#pragma once

#include <cstdint>
#include <random>

#include "barcode/term.hpp"

namespace barcode {

/// Deterministic generators for the property suites and the `gen`
/// subcommand. The same seed always produces the same set.

/// Up to `size` distinct terms in n variables with exponents in
/// [0, max_exp]. Fewer terms are returned only when the exponent box is
/// too small to hold `size` distinct ones.
TermSet random_term_set(std::uint64_t seed, int n, int size, int max_exp);
TermSet random_term_set(std::mt19937_64& rng, int n, int size, int max_exp);

/// A random order ideal: the union of the divisor boxes of `corners`
/// random terms (plus the constant). Exponents bounded by max_exp.
TermSet random_order_ideal(std::uint64_t seed, int n, int corners, int max_exp);
TermSet random_order_ideal(std::mt19937_64& rng, int n, int corners, int max_exp);

/// A random variable ordering.
VariableOrdering random_ordering(std::mt19937_64& rng, int n);

}  // namespace barcode

#pragma once

#include <gmpxx.h>

#include <string>

namespace nilstab {

using Integer = mpz_class;

inline std::string to_string(const Integer &z) { return z.get_str(); }

// Generalized binomial coefficient n(n-1)...(n-k+1)/k!; n may be negative.
Integer binomial(const Integer &n, unsigned long k);

} // namespace nilstab

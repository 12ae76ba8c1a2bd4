#pragma once

#include <gmpxx.h>

#include <string>

namespace cranklab {

/// Arbitrary-precision signed integer used for every coefficient in the engine.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace cranklab

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vls {

/// Exact signed integer used for series coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative counts. Same representation as BigInt; the sign is a
/// convention enforced by the functions that produce them.
using BigCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace vls

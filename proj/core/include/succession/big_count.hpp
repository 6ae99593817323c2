#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace succession {

/// Exact arbitrary-precision count. All counting in this library is integer
/// arithmetic; n! outgrows 64 bits already at n = 21. Results are nonnegative;
/// intermediate inclusion-exclusion sums use the same (signed) type.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace succession

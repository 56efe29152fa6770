#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace thetaforge {

/// Exact integer coefficient. Pfaffian expansions and Schubert products
/// overflow 64 bits at modest sizes, so all ring arithmetic is done in
/// arbitrary precision.
using Coefficient = boost::multiprecision::cpp_int;

}  // namespace thetaforge

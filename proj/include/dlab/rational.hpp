#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dlab {

using Charge = boost::multiprecision::cpp_rational;

inline Charge frac(long long p, long long q = 1) { return Charge(p) / Charge(q); }

/// Always "p/q" with q > 0, so integers render as "n/1".
inline std::string to_string(const Charge& c) {
  return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}

}  // namespace dlab

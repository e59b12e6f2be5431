#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoassoc {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace twoassoc

#ifndef ROOK_INTEGER_HPP_
#define ROOK_INTEGER_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rook {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  inline std::string to_decimal(BigInt const& x) {
    return x.str();
  }

  //! binomial(y, x) with the conventions binomial(y, x) = 0 whenever x < 0 or
  //! x > y (this also covers negative y).
  inline BigInt binomial(std::int64_t y, std::int64_t x) {
    if (x < 0 || y < 0 || x > y) {
      return 0;
    }
    if (x > y - x) {
      x = y - x;
    }
    BigInt result = 1;
    for (std::int64_t i = 1; i <= x; ++i) {
      result *= y - x + i;
      result /= i;
    }
    return result;
  }

}  // namespace rook

#endif  // ROOK_INTEGER_HPP_

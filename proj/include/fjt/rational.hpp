#ifndef FJT_RATIONAL_HPP_
#define FJT_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fjt {

using Rational = boost::rational<std::int64_t>;

}  // namespace fjt

namespace boost {

// boost's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons. Exact-match overloads win overload resolution.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }

}  // namespace boost

namespace fjt {

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

}  // namespace fjt

#endif  // FJT_RATIONAL_HPP_

#include "fjt/rational.hpp"

#include <charconv>

#include "fjt/errors.hpp"

namespace fjt {

std::string to_string(const Rational& x) {
  if (x.denominator() == 1)
    return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput("not an exact rational: '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(text, text));
  std::int64_t num = parse_int(std::string_view(text).substr(0, slash), text);
  std::int64_t den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0)
    throw InvalidInput("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace fjt

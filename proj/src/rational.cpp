#include "liekit/rational.hpp"

#include <ostream>

namespace liekit {

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw ParseError("Rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("Rational: zero denominator in \"" + text + "\"");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("Rational: cannot parse \"" + text + "\"");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liekit

#include "homnlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace homnlie {

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto take_digits = [&]() -> std::optional<std::string> {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return std::string(text.substr(start, pos - start));
  };
  auto num = take_digits();
  if (!num) return std::nullopt;
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    auto d = take_digits();
    if (!d) return std::nullopt;
    den = *d;
  }
  if (pos != text.size()) return std::nullopt;
  mpz_class n(*num), m(den);
  if (m == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, m);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace homnlie

#include "linedig/numeric.hpp"

#include <cctype>

#include "linedig/errors.hpp"

namespace linedig {

std::string to_decimal(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

bool is_integral(const Rat& v) { return denominator(v) == 1; }

namespace {

bool valid_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  Rat value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!valid_digits(num) || !valid_digits(den) || Int(den) == 0)
      throw ParseError("bad rational literal: " + text);
    value = Rat(Int(num), Int(den));
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!valid_digits(whole) || !valid_digits(frac))
      throw ParseError("bad decimal literal: " + text);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(Int(whole) * scale + Int(frac), scale);
  } else {
    if (!valid_digits(body)) throw ParseError("bad integer literal: " + text);
    value = Rat(Int(body));
  }
  return negative ? -value : value;
}

}  // namespace linedig

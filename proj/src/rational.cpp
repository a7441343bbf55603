#include "cbd/rational.hpp"

#include <cctype>
#include <cstdio>

#include "cbd/errors.hpp"

namespace cbd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  fail(ErrorCode::SyntaxError, "not a valid rational number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_rational(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) bad_rational(text);
  }

  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    BigInt d{std::string(den)};
    if (d == 0) fail(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    value = Rat(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_rational(text);
    if (!whole.empty() && !all_digits(whole)) bad_rational(text);
    if (!frac.empty() && !all_digits(frac)) bad_rational(text);
    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) bad_rational(text);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rat(BigInt{digits}, den);
  } else {
    if (!all_digits(s)) bad_rational(text);
    value = Rat(BigInt{std::string(s)});
  }
  return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

std::string format_decimal(const Rat& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", to_double(value));
  return buf;
}

}  // namespace cbd

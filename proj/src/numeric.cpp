#include "mbc/numeric.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "mbc/errors.hpp"

namespace mbc {

std::string format_exact(const Exact& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string format_shortest(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_17g(double x) {
  std::array<char, 64> buf{};
  int len = std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw DomainError("malformed number: '" + std::string(whole) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Exact parse_exact(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash), text);
    BigInt den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Exact(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac)))
      throw DomainError("malformed number: '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
    BigInt fpart = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    Exact q(whole * scale + fpart, scale);
    return neg ? Exact(-q) : q;
  }
  return Exact(parse_int(text, text));
}

Exact floor_exact(const Exact& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return Exact(f);
}

Exact ceil_exact(const Exact& q) { return -floor_exact(-q); }

Exact gcd_exact(const Exact& a, const Exact& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt g_num = boost::multiprecision::gcd(numerator(a), numerator(b));
  BigInt l_den = boost::multiprecision::lcm(denominator(a), denominator(b));
  return Exact(g_num, l_den);
}

}  // namespace mbc

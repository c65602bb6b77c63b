#pragma once

// Arithmetic modes. Every solver is a template over the number type and is
// instantiated for Exact (GMP rationals) and double.

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace mbc {

using Exact = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class ArithmeticMode { Exact, Float };

template <class Num>
concept ContestNumber = std::same_as<Num, Exact> || std::same_as<Num, double>;

inline Exact make_exact(std::int64_t num, std::int64_t den = 1) {
  return Exact(BigInt(num), BigInt(den));
}

template <ContestNumber Num>
Num from_exact(const Exact& q) {
  if constexpr (std::same_as<Num, Exact>) {
    return q;
  } else {
    return q.convert_to<double>();
  }
}

template <ContestNumber Num>
Num from_int(std::int64_t num, std::int64_t den = 1) {
  if constexpr (std::same_as<Num, Exact>) {
    return make_exact(num, den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

inline double to_double(const Exact& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Reduced "p/q" form; integers print as "p/1".
std::string format_exact(const Exact& q);

/// Shortest decimal that round-trips to the same double.
std::string format_shortest(double x);

/// printf("%.17g").
std::string format_17g(double x);

inline std::string format_number(const Exact& q) { return format_exact(q); }
inline std::string format_number(double x) { return format_shortest(x); }

/// Parses "p/q", integers and plain decimals ("1.49") exactly.
/// Throws DomainError on malformed input.
Exact parse_exact(std::string_view text);

Exact floor_exact(const Exact& q);
Exact ceil_exact(const Exact& q);

/// Largest rational dividing both arguments (both must be positive).
Exact gcd_exact(const Exact& a, const Exact& b);

}  // namespace mbc

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trisq {

using BigInt = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws on a zero denominator.
Rat make_rat(const BigInt& num, const BigInt& den = 1);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

// Accepts "a", "a/b" and finite decimals such as "-0.125"; the result is exact.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);
double to_double(const Rat& q);

BigInt binomial(const BigInt& n, unsigned long k);
inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// A point of the (triangle density, square density) plane, or any of its
// affine images.
struct QPoint {
  Rat x;
  Rat y;
};

inline bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
// Lexicographic (x, then y).
bool lex_less(const QPoint& a, const QPoint& b);

std::string to_string(const QPoint& p);

}  // namespace trisq

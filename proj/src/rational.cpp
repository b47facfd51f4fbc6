#include "trisq/rational.hpp"

#include "trisq/error.hpp"

#include <cctype>

namespace trisq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::not_regular: return "graph is not regular";
    case ErrorCode::degree_mismatch: return "degree mismatch";
    case ErrorCode::outside_region: return "point outside region";
    case ErrorCode::construction_failed: return "construction failed";
    case ErrorCode::io_error: return "i/o error";
  }
  return "unknown error";
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(whole) + "'");
  BigInt z{std::string(s)};
  return neg ? BigInt(-z) : z;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(text.substr(slash + 1), text);
    return make_rat(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
      throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(text) + "'");
    std::string_view head = text.substr(0, dot);
    bool neg = !head.empty() && head[0] == '-';
    std::string_view unsigned_head = (!head.empty() && (head[0] == '-' || head[0] == '+')) ? head.substr(1) : head;
    if (unsigned_head.empty() && frac.empty())
      throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(text) + "'");
    BigInt whole = unsigned_head.empty() ? BigInt(0) : parse_int(unsigned_head, text);
    BigInt scale = 1;
    BigInt digits = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = whole * scale + digits;
    return make_rat(neg ? BigInt(-num) : num, scale);
  }
  return make_rat(parse_int(text, text));
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }
double to_double(const Rat& q) { return q.get_d(); }

BigInt binomial(const BigInt& n, unsigned long k) {
  if (n < 0) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

bool lex_less(const QPoint& a, const QPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const QPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace trisq

#include "signet/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace signet {

Rational rational_of(double x) { return Rational(x); }

double to_double(const Rational& q) { return q.get_d(); }

std::string rational_repr(const Rational& q) { return q.get_str(); }

namespace {

// Parses [+-]?digits[.digits][(e|E)[+-]?digits] into an exact rational.
std::optional<Rational> parse_decimal(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  std::string digits;
  std::size_t int_digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
  int_digits = digits.size();
  std::size_t frac_digits = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) return std::nullopt;
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) eneg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      exp10 = exp10 * 10 + (s[pos++] - '0');
      if (exp10 > 100000) return std::nullopt;
    }
    if (eneg) exp10 = -exp10;
  }
  if (pos != s.size()) return std::nullopt;
  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  long shift = exp10 - static_cast<long>(frac_digits);
  mpz_class num = mantissa;
  mpz_class den = 1;
  if (shift >= 0) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= p10;
  } else {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
  }
  if (neg) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<Rational> parse_exact_weight(const std::string& token) {
  if (token.empty()) return std::nullopt;
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    const std::string ns = token.substr(0, slash);
    const std::string ds = token.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    auto check_int = [](const std::string& t) {
      std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    if (!check_int(ns) || !check_int(ds)) return std::nullopt;
    mpz_class den(ds, 10);
    if (den == 0) return std::nullopt;
    Rational q(mpz_class(ns, 10), den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(token);
}

std::string weight_repr(double d, const Rational& q) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  std::string shortest(buf, res.ptr);
  if (auto parsed = parse_exact_weight(shortest); parsed && *parsed == q) return shortest;

  // Exact finite decimal expansion exists iff the denominator is 2^a * 5^b.
  mpz_class den = q.get_den();
  unsigned long a = 0, b = 0;
  mpz_class rem = den;
  while (mpz_divisible_ui_p(rem.get_mpz_t(), 2)) {
    mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), 2);
    ++a;
  }
  while (mpz_divisible_ui_p(rem.get_mpz_t(), 5)) {
    mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), 5);
    ++b;
  }
  if (rem == 1) {
    unsigned long k = a > b ? a : b;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, k);
    mpz_class scaled = q.get_num() * p10 / den;  // exact by construction
    bool neg = scaled < 0;
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - k);
    if (k > 0) {
      std::string frac = digits.substr(digits.size() - k);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
  }
  return q.get_str();
}

}  // namespace signet

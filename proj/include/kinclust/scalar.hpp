#ifndef KINCLUST_SCALAR_HPP
#define KINCLUST_SCALAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kinclust {

/// Exact rational number. Always kept in canonical (reduced) form.
using Scalar = mpq_class;

/// Thrown for malformed numeric or document input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

/// Parses an exact rational from a decimal string ("-2.4142135624",
/// "1e-3", "+.5") or a fraction ("-7/3").
inline Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return negative ? Scalar(-r) : r;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_part = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_neg = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!detail::all_digits(exp_part) || exp_part.size() > 6)
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_neg) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw ParseError("malformed number '" + std::string(text) + "'");
  if ((!int_part.empty() && !detail::all_digits(int_part)) ||
      (!frac_part.empty() && !detail::all_digits(frac_part)))
    throw ParseError("malformed number '" + std::string(text) + "'");

  std::string digits = std::string(int_part) + std::string(frac_part);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  mpz_class num(digits, 10);
  Scalar r;
  if (scale >= 0) {
    r = Scalar(num, detail::pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Scalar(num * detail::pow10(static_cast<unsigned long>(-scale)));
  }
  r.canonicalize();
  return negative ? Scalar(-r) : r;
}

/// "p/q" form, or "p" when the denominator is one.
inline std::string to_fraction_string(const Scalar& v) { return v.get_str(10); }

/// Decimal rendering with `digits` significant digits (not exact).
inline std::string to_decimal_string(const Scalar& v, int digits = 12) {
  mpf_class f(v, 512);
  std::vector<char> buf(64 + static_cast<std::size_t>(digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

/// Exact decimal string if the value has a terminating expansion, otherwise
/// the fraction form. parse_scalar() inverts both.
inline std::string to_exact_string(const Scalar& v) {
  mpz_class den = v.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return to_fraction_string(v);

  unsigned long places = std::max(twos, fives);
  if (places == 0) return v.get_num().get_str(10);
  mpz_class scaled = v.get_num() * detail::pow10(places) / v.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

inline double to_double(const Scalar& v) { return v.get_d(); }

/// num/den in canonical form.
inline Scalar ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Scalar r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

/// Rational enclosures of sqrt(2) (ten decimals).
inline Scalar sqrt2_lower() { return ratio(14142135623L, 10000000000L); }
inline Scalar sqrt2_upper() { return ratio(14142135624L, 10000000000L); }

}  // namespace kinclust

#endif  // KINCLUST_SCALAR_HPP

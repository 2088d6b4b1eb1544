#include "crn/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crn {

std::optional<Rational> parse_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    pos = 1;
  }
  auto slash = s.find('/', pos);
  if (slash != std::string::npos) {
    auto num = parse_decimal(s.substr(0, slash));
    auto den = parse_decimal(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == 'e' || c == 'E') {
      // decimal exponent, e.g. "1e-3"
      try {
        int exp = std::stoi(s.substr(pos + 1));
        if (!seen_digit) return std::nullopt;
        Rational base(boost::multiprecision::cpp_int(digits.empty() ? "0" : digits));
        Rational scale = 1;
        boost::multiprecision::cpp_int ten(10);
        int shift = exp - frac_digits;
        boost::multiprecision::cpp_int p =
            boost::multiprecision::pow(ten, static_cast<unsigned>(std::abs(shift)));
        Rational value = shift >= 0 ? base * Rational(p) : base / Rational(p);
        (void)scale;
        return negative ? -value : value;
      } catch (...) {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  Rational value(boost::multiprecision::cpp_int(digits));
  if (frac_digits > 0) {
    boost::multiprecision::cpp_int ten(10);
    value /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(frac_digits)));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(q);
  cpp_int den = denominator(q);
  // den = 2^a 5^b  <=>  exact finite decimal
  cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) {
    std::ostringstream os;
    os << num << "/" << den;
    return os.str();
  }
  int shift = std::max(twos, fives);
  cpp_int ten(10);
  cpp_int scaled = num * boost::multiprecision::pow(ten, static_cast<unsigned>(shift)) / den;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.str();
  std::string out;
  if (shift == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= shift)
      digits.insert(0, shift - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

int rational_rank(RationalMatrix mat) {
  if (mat.empty()) return 0;
  const std::size_t rows = mat.size();
  const std::size_t cols = mat[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && mat[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[rank], mat[pivot]);
    const Rational inv = mat[rank][col];
    for (std::size_t j = col; j < cols; ++j) mat[rank][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || mat[i][col] == 0) continue;
      const Rational factor = mat[i][col];
      for (std::size_t j = col; j < cols; ++j)
        mat[i][j] -= factor * mat[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace crn

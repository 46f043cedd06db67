#ifndef WEYLKIT_SYMBOL_PARSER_HPP
#define WEYLKIT_SYMBOL_PARSER_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "weylkit/errors.hpp"
#include "weylkit/symbol.hpp"

// Grammar (whitespace insignificant):
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*'] atom | atom | coeff
//   coeff := real | '(' ['+'|'-'] real [('+'|'-') real 'i'] ')' | '(' ['+'|'-'] real 'i' ')'
//   real  := decimal ['/' decimal]
//   atom  := 'z' ['^' int] | 'zbar' ['^' int] | 'indicator' '(' real ')'

namespace weylkit {

namespace detail {

/// Rational with int64 parts when representable; `approx` always holds the
/// correctly rounded double of the literal (or the best available value once
/// exactness is lost).
struct Number {
  std::optional<std::pair<std::int64_t, std::int64_t>> exact;  // numerator, denominator > 0
  double approx = 0.0;

  static Number from_fraction(__int128 num, __int128 den) {
    Number n;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    const __int128 lim = std::numeric_limits<std::int64_t>::max();
    if (num <= lim && num >= -lim && den <= lim) {
      n.exact = std::make_pair(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
      n.approx = to_double(n.exact->first, n.exact->second);
    } else {
      n.approx = static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
    }
    return n;
  }

  static double to_double(std::int64_t num, std::int64_t den) {
    constexpr std::int64_t k53 = std::int64_t{1} << 53;
    if (num <= k53 && num >= -k53 && den <= k53) return static_cast<double>(num) / static_cast<double>(den);
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
  }

  double value() const { return approx; }
  bool is_zero() const { return exact ? exact->first == 0 : approx == 0.0; }

  Number operator-() const {
    Number n = *this;
    if (n.exact) n.exact->first = -n.exact->first;
    n.approx = -n.approx;
    return n;
  }

  friend Number operator+(const Number& a, const Number& b) {
    if (a.exact && b.exact)
      return from_fraction(static_cast<__int128>(a.exact->first) * b.exact->second +
                               static_cast<__int128>(b.exact->first) * a.exact->second,
                           static_cast<__int128>(a.exact->second) * b.exact->second);
    Number n;
    n.approx = a.approx + b.approx;
    return n;
  }

  friend Number operator*(const Number& a, const Number& b) {
    if (a.exact && b.exact)
      return from_fraction(static_cast<__int128>(a.exact->first) * b.exact->first,
                           static_cast<__int128>(a.exact->second) * b.exact->second);
    Number n;
    n.approx = a.approx * b.approx;
    return n;
  }
};

struct ExactComplex {
  Number re, im;

  std::complex<double> value() const { return {re.value(), im.value()}; }
  bool is_one() const {
    return re.exact && im.exact && re.exact->first == 1 && re.exact->second == 1 && im.exact->first == 0;
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ExactComplex operator-() const { return {-re, -im}; }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re + -(a.im * b.im), a.re * b.im + a.im * b.re};
  }
};

inline ExactComplex exact_one() { return {Number::from_fraction(1, 1), Number::from_fraction(0, 1)}; }

class SymbolParser {
 public:
  explicit SymbolParser(std::string_view text) : s_(text) {}

  SymbolExpr parse() {
    skip_ws();
    if (at_end()) fail({"term"}, "empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail({"+", "-", "end of input"}, "unexpected character");
      negative = peek() == '-';
      ++pos_;
      term(negative);
    }
    return build();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<int, ExactComplex> terms_;
  std::optional<Number> indicator_;
  std::size_t indicator_pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& what) const {
    throw ParseError(pos_, std::move(expected), what);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail({std::string(1, c)}, "unexpected character");
    ++pos_;
  }

  bool starts_coeff() const { return std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '('; }

  void term(bool negative) {
    skip_ws();
    std::optional<ExactComplex> coeff;
    const std::size_t coeff_pos = pos_;
    if (starts_coeff()) {
      coeff = coefficient();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail({"z", "zbar", "indicator"}, "expected an atom after '*'");
      }
    }
    skip_ws();
    ExactComplex c = coeff.value_or(exact_one());
    if (negative) c = -c;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t atom_pos = pos_;
      const auto [kind, value] = atom();
      if (kind == Atom::Indicator) {
        if ((coeff && !coeff->is_one()) || negative) {
          pos_ = coeff ? coeff_pos : atom_pos;
          fail({}, "the indicator term takes no coefficient or sign");
        }
        if (indicator_) {
          pos_ = atom_pos;
          fail({}, "only one indicator term is allowed");
        }
        indicator_ = value.re;
        indicator_pos_ = atom_pos;
        return;
      }
      add(static_cast<int>(std::lround(value.re.value())), c);
      return;
    }
    if (!coeff) fail({"number", "(", "z", "zbar", "indicator"}, "expected a term");
    add(0, c);
  }

  void add(int m, const ExactComplex& c) {
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.emplace(m, c);
    else
      it->second = it->second + c;
  }

  enum class Atom { Power, Indicator };

  std::pair<Atom, ExactComplex> atom() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    if (word == "indicator") {
      expect('(');
      skip_ws();
      const std::size_t arg_pos = pos_;
      const Number J = real();
      if (!(J.value() > 1.0)) {
        pos_ = arg_pos;
        fail({}, "indicator parameter must exceed 1");
      }
      expect(')');
      return {Atom::Indicator, {J, Number::from_fraction(0, 1)}};
    }
    int sign;
    if (word == "z")
      sign = 1;
    else if (word == "zbar")
      sign = -1;
    else {
      pos_ = start;
      fail({"z", "zbar", "indicator"}, "unknown identifier '" + std::string(word) + "'");
    }
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"}, "expected an exponent");
      long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (peek() - '0');
        if (e > SymbolExpr::kMaxExponent) {
          pos_ = exp_pos;
          fail({}, "exponent exceeds " + std::to_string(SymbolExpr::kMaxExponent));
        }
        ++pos_;
      }
      exponent = static_cast<int>(e);
    }
    return {Atom::Power, {Number::from_fraction(sign * exponent, 1), Number::from_fraction(0, 1)}};
  }

  ExactComplex coefficient() {
    if (peek() != '(') return {real(), Number::from_fraction(0, 1)};
    ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    Number first = real();
    if (neg) first = -first;
    skip_ws();
    ExactComplex c{first, Number::from_fraction(0, 1)};
    if (peek() == 'i') {
      ++pos_;
      c = {Number::from_fraction(0, 1), first};
    } else if (peek() == '+' || peek() == '-') {
      const bool im_neg = peek() == '-';
      ++pos_;
      skip_ws();
      Number im = real();
      skip_ws();
      if (peek() != 'i') fail({"i"}, "expected imaginary unit");
      ++pos_;
      c.im = im_neg ? -im : im;
    }
    expect(')');
    return c;
  }

  Number real() {
    Number n = decimal();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      const Number d = decimal();
      if (d.is_zero()) {
        pos_ = den_pos;
        fail({}, "division by zero");
      }
      if (n.exact && d.exact)
        return Number::from_fraction(static_cast<__int128>(n.exact->first) * d.exact->second,
                                     static_cast<__int128>(n.exact->second) * d.exact->first);
      Number q;
      q.approx = n.approx / d.approx;
      return q;
    }
    return n;
  }

  Number decimal() {
    skip_ws();
    const std::size_t start = pos_;
    __int128 num = 0, den = 1;
    bool overflow = false, digits = false;
    auto accumulate = [&](bool fraction) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits = true;
        if (!overflow) {
          num = num * 10 + (peek() - '0');
          if (fraction) den *= 10;
          if (num > (static_cast<__int128>(1) << 100) || den > (static_cast<__int128>(1) << 100)) overflow = true;
        }
        ++pos_;
      }
    };
    accumulate(false);
    if (peek() == '.') {
      ++pos_;
      accumulate(true);
    }
    if (!digits) {
      pos_ = start;
      fail({"number"}, "expected a number");
    }
    const std::string text(s_.substr(start, pos_ - start));
    Number n = overflow ? Number{} : Number::from_fraction(num, den);
    // strtod gives the correctly rounded value of the literal itself.
    n.approx = std::strtod(text.c_str(), nullptr);
    return n;
  }

  SymbolExpr build() const {
    SymbolExpr out;
    std::size_t nonzero = 0;
    for (const auto& [m, c] : terms_) {
      if (c.is_zero()) continue;
      if (++nonzero > SymbolExpr::kMaxTerms) throw ParseError(s_.size(), {}, "more than 64 nonzero terms");
      out.add(m, c.value());
    }
    if (indicator_) out.with_indicator(indicator_->value());
    return out;
  }
};

inline std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Parses symbol text such as "zbar + (1/3)*z^2" or "indicator(2)".
inline SymbolExpr parse_symbol(std::string_view text) { return detail::SymbolParser(text).parse(); }

/// Canonical text for a symbol; parse_symbol(print_symbol(s)) == s.
inline std::string print_symbol(const SymbolExpr& symbol) {
  std::string out;
  auto append = [&](bool negative, const std::string& body) {
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
  };
  for (const auto& [m, c] : symbol.terms()) {
    std::string atom;
    if (m > 0) atom = m == 1 ? "z" : "z^" + std::to_string(m);
    if (m < 0) atom = m == -1 ? "zbar" : "zbar^" + std::to_string(-m);
    if (c.imag() == 0.0) {
      const bool neg = std::signbit(c.real());
      const double mag = std::abs(c.real());
      if (atom.empty())
        append(neg, detail::format_real(mag));
      else if (mag == 1.0)
        append(neg, atom);
      else
        append(neg, detail::format_real(mag) + "*" + atom);
    } else {
      const std::string im = detail::format_real(std::abs(c.imag()));
      std::string body = "(" + detail::format_real(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + im + "i)";
      append(false, atom.empty() ? body : body + "*" + atom);
    }
  }
  if (symbol.indicator_J()) append(false, "indicator(" + detail::format_real(*symbol.indicator_J()) + ")");
  if (out.empty()) out = "0";
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_SYMBOL_PARSER_HPP

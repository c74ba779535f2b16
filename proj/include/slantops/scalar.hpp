#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "slantops/lattice.hpp"

namespace slantops {

/// Exact rational scalar component.
using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts. All identity
/// verdicts reduce to equalities of these; no tolerances anywhere.
struct RatComplex {
  Rational re{0};
  Rational im{0};

  RatComplex() = default;
  RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit RatComplex(long long r) : re(r) {}
  static RatComplex one() { return RatComplex(1); }
  static RatComplex i_unit() { return RatComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  RatComplex conj() const { return RatComplex(re, -im); }

  /// |z|^2 = re^2 + im^2, exact.
  Rational norm_sq() const { return re * re + im * im; }

  RatComplex operator+(const RatComplex& o) const { return RatComplex(re + o.re, im + o.im); }
  RatComplex operator-(const RatComplex& o) const { return RatComplex(re - o.re, im - o.im); }
  RatComplex operator-() const { return RatComplex(-re, -im); }

  RatComplex operator*(const RatComplex& o) const {
    return RatComplex(re * o.re - im * o.im, re * o.im + im * o.re);
  }

  RatComplex& operator+=(const RatComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  RatComplex& operator-=(const RatComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }
  bool operator!=(const RatComplex& o) const { return !(*this == o); }

  std::complex<double> to_complex_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

/// Formats as "re+im i" (e.g. "3/2-1/4i"); pure parts collapse to "re" or "im i".
inline std::string format_scalar(const RatComplex& z) {
  if (z.im == 0) return format_rational(z.re);
  std::string im_part = format_rational(z.im) + "i";
  if (z.re == 0) return im_part;
  if (z.im > 0) return format_rational(z.re) + "+" + im_part;
  return format_rational(z.re) + im_part;
}

inline std::ostream& operator<<(std::ostream& os, const RatComplex& z) {
  return os << format_scalar(z);
}

/// Parses "n" or "n/d" with optional sign; throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty token");
  const auto slash = text.find('/');
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("parse_rational: bad integer");
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (pos == s.size()) throw std::invalid_argument("parse_rational: bad integer");
    for (std::size_t i = pos; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("parse_rational: bad integer '" + s + "'");
    }
    return Int(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rational(num, den);
}

}  // namespace slantops

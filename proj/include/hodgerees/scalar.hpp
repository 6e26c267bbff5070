#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgerees {

using Rational = mpq_class;
using Complex = std::complex<double>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Element a + b*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  // *this -= f * y and *this += f * y without temporaries
  void sub_product(const GaussianRational& f, const GaussianRational& y) { fma(f, y, -1); }
  void add_product(const GaussianRational& f, const GaussianRational& y) { fma(f, y, 1); }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // "a/b", "a/b+c/d i", "c/d i", "i", "-i"
  std::string to_string() const;
  static GaussianRational parse(std::string_view s);

 private:
  void fma(const GaussianRational& f, const GaussianRational& y, int sign);

  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

Rational parse_rational(std::string_view s);

// Per-backend behaviour.  For the float backend the rank tolerance is relative
// to the largest entry of the working matrix.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static bool is_zero(const GaussianRational& x, double) { return x.is_zero(); }
  static bool is_real(const GaussianRational& x, double) { return x.is_real(); }
  static double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }
  static GaussianRational i() { return GaussianRational::i(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }
  static bool is_real(const Complex& x, double tol) { return std::abs(x.imag()) <= tol; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex i() { return {0.0, 1.0}; }
};

inline constexpr double kDefaultTolerance = 1e-9;

// HODGEREES_TOL if set and parseable, otherwise kDefaultTolerance.
double default_tolerance();

Complex parse_complex(std::string_view s);

}  // namespace hodgerees

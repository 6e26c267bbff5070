#include "hodgerees/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace hodgerees {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

void GaussianRational::fma(const GaussianRational& f, const GaussianRational& y, int sign) {
  thread_local mpq_class t;
  auto acc = [&](Rational& out, const Rational& a, const Rational& b, int s) {
    if (sgn(a) == 0 || sgn(b) == 0) return;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    if (s > 0)
      mpq_add(out.get_mpq_t(), out.get_mpq_t(), t.get_mpq_t());
    else
      mpq_sub(out.get_mpq_t(), out.get_mpq_t(), t.get_mpq_t());
  };
  acc(re_, f.re_, y.re_, sign);
  acc(re_, f.im_, y.im_, -sign);
  acc(im_, f.re_, y.im_, sign);
  acc(im_, f.im_, y.re_, sign);
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  std::string out;
  if (sgn(re_) != 0) {
    out = rational_string(re_);
    if (sgn(im_) > 0) out += '+';
  }
  if (im_ == 1)
    out += "i";
  else if (im_ == -1)
    out += "-i";
  else
    out += rational_string(im_) + " i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

Rational parse_rational(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty rational literal");
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  // decimals are accepted and converted exactly
  auto dot = buf.find('.');
  if (dot != std::string::npos) {
    if (buf.find('/') != std::string::npos) throw ParseError("bad rational literal '" + std::string(s) + "'");
    std::string frac = buf.substr(dot + 1);
    std::string whole = buf.substr(0, dot);
    bool neg = !whole.empty() && whole.front() == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    for (char c : whole + frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad rational literal '" + std::string(s) + "'");
    mpz_class num(whole + frac), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  for (size_t k = 0; k < buf.size(); ++k) {
    char c = buf[k];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && k == 0)))
      throw ParseError("bad rational literal '" + std::string(s) + "'");
  }
  Rational q;
  try {
    q = Rational(buf);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + std::string(s) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::parse(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.back() != 'i') return {parse_rational(s), 0};
  std::string_view body = trim(s.substr(0, s.size() - 1));
  // split at the last sign that is not the leading character
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view t) -> Rational {
    t = trim(t);
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_rational(t);
  };
  if (split == std::string_view::npos) return {0, imag_part(body)};
  return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

double default_tolerance() {
  if (const char* env = std::getenv("HODGEREES_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultTolerance;
}

Complex parse_complex(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty complex literal");
  auto num = [&](std::string_view t) -> double {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::string buf(t);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) throw ParseError("bad complex literal '" + std::string(s) + "'");
    return v;
  };
  if (s.back() != 'i') return {num(s), 0.0};
  std::string_view body = s.substr(0, s.size() - 1);
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, num(body)};
  return {num(body.substr(0, split)), num(body.substr(split))};
}

}  // namespace hodgerees

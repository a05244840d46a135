#pragma once
// Minimal complex arithmetic over the MPFR real type.  std::complex over a
// non-builtin type is unspecified, and the saddle analysis needs explicit
// control of every branch anyway, so this stays deliberately small.

#include "dirforms/mp.hpp"

namespace dirforms {

struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  explicit Complex(long v) : re(v), im(0) {}
};

inline Complex operator+(const Complex& x, const Complex& y) {
  return {x.re + y.re, x.im + y.im};
}
inline Complex operator-(const Complex& x, const Complex& y) {
  return {x.re - y.re, x.im - y.im};
}
inline Complex operator-(const Complex& x) { return {-x.re, -x.im}; }
inline Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline Complex operator*(const Real& s, const Complex& x) {
  return {s * x.re, s * x.im};
}
inline Complex operator*(const Complex& x, const Real& s) {
  return {x.re * s, x.im * s};
}
inline Complex operator/(const Complex& x, const Real& s) {
  return {x.re / s, x.im / s};
}
inline Complex operator/(const Complex& x, const Complex& y) {
  Real n = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}
inline Complex operator+(const Complex& x, const Real& s) {
  return {x.re + s, x.im};
}
inline Complex operator-(const Complex& x, const Real& s) {
  return {x.re - s, x.im};
}
inline Complex conj(const Complex& x) { return {x.re, -x.im}; }
inline Real abs(const Complex& x) { return hypot(x.re, x.im); }
inline Real norm(const Complex& x) { return x.re * x.re + x.im * x.im; }
inline Real arg(const Complex& x) { return atan2(x.im, x.re); }
inline Complex cexp(const Complex& x) {
  Real m = exp(x.re);
  return {m * cos(x.im), m * sin(x.im)};
}
// Principal branch, argument in (-pi, pi].
inline Complex clog(const Complex& x) { return {log(abs(x)), arg(x)}; }

}  // namespace dirforms

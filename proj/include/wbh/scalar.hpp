#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "wbh/rational.hpp"

namespace wbh {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string str(const Rational& x) { return x.str(); }
  static double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
};

// Float mode is exploratory only. The tolerance is process wide, set once by
// the command line front end before any computation starts.
inline double& float_tolerance() {
  static double tol = 1e-9;
  return tol;
}

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return std::fabs(x) <= float_tolerance(); }
  static bool equal(double a, double b) { return std::fabs(a - b) <= float_tolerance(); }
  static double from_rational(const Rational& r) { return r.to_double(); }
  static std::string str(double x) {
    if (is_zero(x)) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }
  static double magnitude(double x) { return std::fabs(x); }
};

}  // namespace wbh

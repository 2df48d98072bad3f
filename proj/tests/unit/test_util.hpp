#pragma once

#include <doctest.h>

#include "krein/linalg.hpp"
#include "krein/space.hpp"

namespace krein::test {

inline double dist(const Matrix& a, const Matrix& b) { return spectral_norm(a - b); }

inline Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Vector v2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace krein::test

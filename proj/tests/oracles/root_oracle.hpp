#pragma once

// Characteristic numbers by the splitting principle for models whose tangent
// bundle is stably a sum of line bundles in one generator: evaluate the genus
// on each formal root as a univariate truncated series.

#include <gmpxx.h>

#include <vector>

#include "series_oracle.hpp"

namespace oracle {

using Poly = std::vector<mpq_class>;  // coefficients of x^0..x^n

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Poly inverse(const Poly& a) {
  Poly q(a.size(), mpq_class(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    mpq_class acc = n == 0 ? mpq_class(1) : mpq_class(0);
    for (std::size_t k = 1; k <= n; ++k) acc -= a[k] * q[n - k];
    q[n] = acc / a[0];
  }
  return q;
}

// Q(c x) truncated to degree n.
inline Poly rescale(const Poly& q, const mpq_class& c, std::size_t n) {
  Poly out(n + 1, mpq_class(0));
  mpq_class p = 1;
  for (std::size_t k = 0; k <= n && k < q.size(); ++k) {
    out[k] = q[k] * p;
    p *= c;
  }
  return out;
}

inline Poly power(const Poly& a, unsigned k) {
  Poly r(a.size(), mpq_class(0));
  r[0] = 1;
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

// T(CP^n) + C = (n+1) O(1): the genus is Q(x)^{n+1}, integral of x^n is 1.
inline mpq_class cp_genus(const Poly& q, unsigned n) { return power(rescale(q, 1, n), n + 1)[n]; }

// T(V) + O(d) = (m+2) O(1) restricted, m = complex dimension; integral of h^m is d.
inline mpq_class hypersurface_genus(const Poly& q, unsigned m, long d) {
  const Poly num = power(rescale(q, 1, m), m + 2);
  const Poly den = rescale(q, mpq_class(d), m);
  return mpq_class(d) * mul(num, inverse(den))[m];
}

// 2^{-2n} (2d+1)/(2n+1)! prod_{k=1}^n ((2d+1)^2 - (2k)^2)
inline mpq_class hypersurface_ahat_closed_form(long n, long d) {
  const long odd = 2 * d + 1;
  mpz_class prod = 1;
  for (long k = 1; k <= n; ++k) prod *= odd * odd - 4 * k * k;
  mpz_class pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(n));
  mpq_class v(mpz_class(odd) * prod, pow4 * factorial(static_cast<unsigned>(2 * n + 1)));
  v.canonicalize();
  return v;
}

}  // namespace oracle

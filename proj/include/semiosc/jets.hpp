#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace semiosc {

// Truncated Taylor series in one variable: c[k] = f^(k)(x0) / k!.
// Arithmetic on Jet values propagates exact derivatives through closed-form
// expressions, so nested operator applications never resort to finite
// differencing.  Order is the highest retained derivative order.
template <int Order>
struct Jet {
  static_assert(Order >= 0, "Jet order must be nonnegative");

  std::array<double, Order + 1> c{};

  Jet() = default;
  explicit Jet(double v) { c[0] = v; }

  // seed for the expansion variable itself
  static Jet variable(double x) {
    Jet j;
    j.c[0] = x;
    if constexpr (Order >= 1) j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }

  // k-th derivative at the expansion point (k! times the Taylor coefficient)
  double deriv(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c[static_cast<std::size_t>(k)] * fact;
  }
};

template <int K>
inline Jet<K> operator+(const Jet<K>& a, const Jet<K>& b) {
  Jet<K> r;
  for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

template <int K>
inline Jet<K> operator-(const Jet<K>& a, const Jet<K>& b) {
  Jet<K> r;
  for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

template <int K>
inline Jet<K> operator-(const Jet<K>& a) {
  Jet<K> r;
  for (int k = 0; k <= K; ++k) r.c[k] = -a.c[k];
  return r;
}

// Cauchy product truncated at the common order
template <int K>
inline Jet<K> operator*(const Jet<K>& a, const Jet<K>& b) {
  Jet<K> r;
  for (int k = 0; k <= K; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
    r.c[k] = s;
  }
  return r;
}

// q = f/g by the series recurrence q_k = (f_k - sum_{j=1..k} g_j q_{k-j}) / g_0
template <int K>
inline Jet<K> operator/(const Jet<K>& f, const Jet<K>& g) {
  if (g.c[0] == 0.0) throw std::domain_error("Jet division by series with zero value");
  Jet<K> q;
  for (int k = 0; k <= K; ++k) {
    double s = f.c[k];
    for (int j = 1; j <= k; ++j) s -= g.c[j] * q.c[k - j];
    q.c[k] = s / g.c[0];
  }
  return q;
}

template <int K> inline Jet<K> operator+(const Jet<K>& a, double b) { Jet<K> r = a; r.c[0] += b; return r; }
template <int K> inline Jet<K> operator+(double a, const Jet<K>& b) { return b + a; }
template <int K> inline Jet<K> operator-(const Jet<K>& a, double b) { Jet<K> r = a; r.c[0] -= b; return r; }
template <int K> inline Jet<K> operator-(double a, const Jet<K>& b) { return -b + a; }

template <int K>
inline Jet<K> operator*(const Jet<K>& a, double b) {
  Jet<K> r;
  for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] * b;
  return r;
}
template <int K> inline Jet<K> operator*(double a, const Jet<K>& b) { return b * a; }
template <int K> inline Jet<K> operator/(const Jet<K>& a, double b) { return a * (1.0 / b); }
template <int K> inline Jet<K> operator/(double a, const Jet<K>& b) { return Jet<K>(a) / b; }

// e_k = (1/k) sum_{j=1..k} j f_j e_{k-j}, e_0 = exp(f_0)
template <int K>
inline Jet<K> exp(const Jet<K>& f) {
  Jet<K> e;
  e.c[0] = std::exp(f.c[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * f.c[j] * e.c[k - j];
    e.c[k] = s / k;
  }
  return e;
}

// l_k = (f_k - (1/k) sum_{j=1..k-1} j l_j f_{k-j}) / f_0, l_0 = log(f_0)
template <int K>
inline Jet<K> log(const Jet<K>& f) {
  if (!(f.c[0] > 0.0)) throw std::domain_error("Jet log of nonpositive value");
  Jet<K> l;
  l.c[0] = std::log(f.c[0]);
  for (int k = 1; k <= K; ++k) {
    double s = f.c[k];
    for (int j = 1; j <= k - 1; ++j) s -= (static_cast<double>(j) / k) * l.c[j] * f.c[k - j];
    l.c[k] = s / f.c[0];
  }
  return l;
}

// s_k = (f_k - sum_{j=1..k-1} s_j s_{k-j}) / (2 s_0), s_0 = sqrt(f_0)
template <int K>
inline Jet<K> sqrt(const Jet<K>& f) {
  if (!(f.c[0] > 0.0)) throw std::domain_error("Jet sqrt of nonpositive value");
  Jet<K> s;
  s.c[0] = std::sqrt(f.c[0]);
  for (int k = 1; k <= K; ++k) {
    double acc = f.c[k];
    for (int j = 1; j <= k - 1; ++j) acc -= s.c[j] * s.c[k - j];
    s.c[k] = acc / (2.0 * s.c[0]);
  }
  return s;
}

// real exponent, positive base
template <int K>
inline Jet<K> pow(const Jet<K>& f, double p) {
  return exp(p * log(f));
}

// truncate a higher-order series to order KOut
template <int KOut, int KIn>
inline Jet<KOut> truncate(const Jet<KIn>& f) {
  static_assert(KOut <= KIn, "cannot extend a truncated series");
  Jet<KOut> r;
  for (int k = 0; k <= KOut; ++k) r.c[k] = f.c[k];
  return r;
}

// series of f', truncated to order KOut (needs KIn >= KOut + 1)
template <int KOut, int KIn>
inline Jet<KOut> derivative_series(const Jet<KIn>& f) {
  static_assert(KOut + 1 <= KIn, "derivative consumes one order");
  Jet<KOut> r;
  for (int k = 0; k <= KOut; ++k) r.c[k] = (k + 1) * f.c[k + 1];
  return r;
}

// series of f'', truncated to order KOut (needs KIn >= KOut + 2)
template <int KOut, int KIn>
inline Jet<KOut> second_derivative_series(const Jet<KIn>& f) {
  static_assert(KOut + 2 <= KIn, "second derivative consumes two orders");
  Jet<KOut> r;
  for (int k = 0; k <= KOut; ++k) r.c[k] = (k + 1) * (k + 2) * f.c[k + 2];
  return r;
}

}  // namespace semiosc

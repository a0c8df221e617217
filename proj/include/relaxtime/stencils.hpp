#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

namespace relaxtime::stencil {

// Second-order central differences of a one-variable function f(e) about e = 0.
// T is the value type (double, std::complex<double>, or a multiprecision type) and H the
// spacing type.

template <typename F, typename H>
auto d1(const F& f, H h) {
  using T = std::decay_t<decltype(f(h))>;
  return T((f(h) - f(-h)) / (H(2) * h));
}

template <typename F, typename H>
auto d2(const F& f, H h) {
  using T = std::decay_t<decltype(f(h))>;
  return T((f(h) - H(2) * f(H(0)) + f(-h)) / (h * h));
}

template <typename F, typename H>
auto d3(const F& f, H h) {
  using T = std::decay_t<decltype(f(h))>;
  return T((f(H(2) * h) - H(2) * f(h) + H(2) * f(-h) - f(H(-2) * h)) / (H(2) * h * h * h));
}

// |sum of terms| / max |term|.
template <typename T, std::size_t N>
auto normalized_residual(const std::array<T, N>& terms) {
  using std::abs;
  using R = std::decay_t<decltype(abs(terms[0]))>;
  T sum = terms[0];
  for (std::size_t i = 1; i < N; ++i) sum += terms[i];
  R largest = abs(terms[0]);
  for (std::size_t i = 1; i < N; ++i) {
    const R a = abs(terms[i]);
    if (a > largest) largest = a;
  }
  return R(abs(sum) / largest);
}

// Terms of 12 u_gg + 12 u_xt + 12 (u u_x)_x + u_xxxx for u(tau, gamma, x).
template <typename U, typename H>
auto kp_terms(const U& u, H tau, H gamma, H x, H h) {
  using T = std::decay_t<decltype(u(tau, gamma, x))>;
  const T ugg = d2([&](H e) { return u(tau, gamma + e, x); }, h);
  const T uxt = d1([&](H e) { return d1([&](H f) { return u(tau + f, gamma, x + e); }, h); }, h);
  const T nonlinear = d1(
      [&](H e) {
        const T ux = d1([&](H f) { return u(tau, gamma, x + e + f); }, h);
        return u(tau, gamma, x + e) * ux;
      },
      h);
  const T uxxxx = d1([&](H e) { return d3([&](H f) { return u(tau, gamma, x + e + f); }, h); }, h);
  return std::array<T, 4>{H(12) * ugg, H(12) * uxt, H(12) * nonlinear, uxxxx};
}

// Terms of 3 u_t + u_xxx + 6 u u_x (KdV) for u(tau, x).
template <typename U, typename H>
auto kdv_terms(const U& u, H tau, H x, H h) {
  using T = std::decay_t<decltype(u(tau, x))>;
  const T ut = d1([&](H e) { return u(tau + e, x); }, h);
  const T ux = d1([&](H e) { return u(tau, x + e); }, h);
  const T uxxx = d3([&](H e) { return u(tau, x + e); }, h);
  return std::array<T, 3>{H(3) * ut, uxxx, H(6) * u(tau, x) * ux};
}

}  // namespace relaxtime::stencil

#pragma once

// Central finite differences with optional Richardson extrapolation.
//
// Nested differentiation is the norm in this library (curvature needs
// derivatives of a metric that is itself built from first derivatives of an
// immersion), so two step sizes are carried: `step` for derivatives of the
// immersion map and `field_step` for derivatives of derived tensor fields and
// for second derivatives of the map.

#include <Eigen/Dense>
#include <type_traits>
#include <utility>

namespace adsrigid {

struct FdScheme {
  double step = 1e-2;
  double field_step = 5e-2;
  int richardson = 2;  // number of extrapolation levels; 0 = plain central differences

  FdScheme scaled(double factor) const { return {step * factor, field_step * factor, richardson}; }
  /// Same scheme but with `field_step` used for first derivatives of the map too.
  FdScheme coarse() const { return {field_step, field_step, richardson}; }
};

namespace fd {

template <class F, class P>
using value_t = std::decay_t<decltype(std::declval<F&>()(std::declval<const P&>()))>;

template <class P>
P offset(const P& x, int axis, double h) {
  P y = x;
  y[axis] += h;
  return y;
}

template <class P>
P offset(const P& x, int a, double ha, int b, double hb) {
  P y = x;
  y[a] += ha;
  y[b] += hb;
  return y;
}

/// Applies `levels` Richardson steps to a second-order central estimator
/// `raw(h)`, halving h each level.
template <class Raw>
auto richardson(Raw&& raw, double h, int levels) {
  using T = std::decay_t<decltype(raw(h))>;
  if (levels <= 0) return T(raw(h));
  // Small fixed table; levels beyond 3 buy nothing in double precision.
  constexpr int kMax = 4;
  const int n = levels < kMax - 1 ? levels + 1 : kMax;
  T table[kMax];
  double hk = h;
  for (int i = 0; i < n; ++i, hk *= 0.5) table[i] = raw(hk);
  double factor = 4.0;
  for (int lev = 1; lev < n; ++lev, factor *= 4.0)
    for (int i = n - 1; i >= lev; --i) table[i] = T((factor * table[i] - table[i - 1]) / (factor - 1.0));
  return T(table[n - 1]);
}

/// d f / d x_axis at x.
template <class F, class P>
value_t<F, P> first(F&& f, const P& x, int axis, double h, int levels) {
  using T = value_t<F, P>;
  auto raw = [&](double hk) -> T {
    return T((f(offset(x, axis, hk)) - f(offset(x, axis, -hk))) / (2.0 * hk));
  };
  return richardson(raw, h, levels);
}

/// d^2 f / dx_a dx_b at x (a == b allowed).
template <class F, class P>
value_t<F, P> second(F&& f, const P& x, int a, int b, double h, int levels) {
  using T = value_t<F, P>;
  if (a == b) {
    auto raw = [&](double hk) -> T {
      return T((f(offset(x, a, hk)) - 2.0 * f(x) + f(offset(x, a, -hk))) / (hk * hk));
    };
    return richardson(raw, h, levels);
  }
  auto raw = [&](double hk) -> T {
    return T((f(offset(x, a, hk, b, hk)) - f(offset(x, a, hk, b, -hk)) -
              f(offset(x, a, -hk, b, hk)) + f(offset(x, a, -hk, b, -hk))) /
             (4.0 * hk * hk));
  };
  return richardson(raw, h, levels);
}

}  // namespace fd
}  // namespace adsrigid

#pragma once

// Adaptive Gauss-Kronrod (G7/K15) integration over a finite interval,
// templated on the value type so the same engine serves real and complex
// integrands.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace fhzeta::quad {

struct Options {
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
  int max_subdivisions = 4000;
  int initial_panels = 1;
};

template <class T>
struct Result {
  T value{};
  double abs_error = 0.0;
  /// Σ |f| weight, the roundoff scale of the sum.
  double abs_integral = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Panel {
  double lo, hi;
  T value;
  double error;
  double abs_integral;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T kron = fc * kWgk[7];
  T gauss = fc * kWg[3];
  double absk = magnitude(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kron += (f1 + f2) * kWgk[j];
    absk += (magnitude(f1) + magnitude(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  return {lo, hi, kron * half, magnitude((kron - gauss) * half), absk * std::fabs(half)};
}

}  // namespace detail

/// Integrates f over [lo, hi]. Panels are bisected worst-first until the
/// summed |K15 - G7| estimate meets max(abs_tol, rel_tol |I|) or the
/// roundoff floor of the panel sums, or max_subdivisions is reached.
template <class T, class F>
Result<T> integrate(F&& f, double lo, double hi, const Options& opt) {
  Result<T> out;
  if (hi == lo) {
    out.converged = true;
    return out;
  }
  using Panel = detail::Panel<T>;
  std::priority_queue<Panel> queue;
  const int n0 = std::max(1, opt.initial_panels);
  const double width = (hi - lo) / n0;
  T total{};
  double err = 0.0;
  double absint = 0.0;
  for (int i = 0; i < n0; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == n0) ? hi : lo + (i + 1) * width;
    Panel p = detail::gk15<T>(f, a, b);
    total += p.value;
    err += p.error;
    absint += p.abs_integral;
    queue.push(p);
  }
  int panels = n0;
  const auto target = [&] {
    constexpr double kRound = 50.0 * std::numeric_limits<double>::epsilon();
    return std::max({opt.abs_tol, opt.rel_tol * detail::magnitude(total),
                     kRound * absint});
  };
  while (err > target() && panels < opt.max_subdivisions) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      queue.push(worst);
      break;
    }
    Panel left = detail::gk15<T>(f, worst.lo, mid);
    Panel right = detail::gk15<T>(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    absint += left.abs_integral + right.abs_integral - worst.abs_integral;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // re-sum from the panels to shed accumulated update drift
  T sum{};
  double esum = 0.0;
  double asum = 0.0;
  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  for (const auto& p : all) {
    sum += p.value;
    esum += p.error;
    asum += p.abs_integral;
  }
  out.value = sum;
  out.abs_error = esum;
  out.abs_integral = asum;
  out.evaluations = 15 * (n0 + 2 * (panels - n0));
  out.converged = esum <= target() * 1.0000001;
  return out;
}

}  // namespace fhzeta::quad

#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration on a finite interval.
// The integrand may return double or std::complex<double>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace primeap::quad {

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

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class V>
struct Segment {
  double a, b;
  V value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class V, class F>
Segment<V> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  V fc = f(c);
  V kronrod = fc * kWgk[7];
  V gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    V f1 = f(c - dx);
    V f2 = f(c + dx);
    kronrod += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  return {a, b, kronrod * h, magnitude((kronrod - gauss) * h)};
}

}  // namespace detail

template <class V>
struct Result {
  V value;
  double error;
  int segments;
};

// Subdivide the worst segment until the summed error estimate drops below
// max(abs_tol, rel_tol*|I|). `initial_panels` pre-splits oscillatory
// integrands.
template <class V, class F>
Result<V> integrate(F&& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0.0,
                    int max_segments = 20000, int initial_panels = 1) {
  std::priority_queue<detail::Segment<V>> heap;
  V total{};
  double err = 0.0;
  initial_panels = std::max(1, initial_panels);
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + (b - a) * i / initial_panels;
    const double hi = (i + 1 == initial_panels) ? b : a + (b - a) * (i + 1) / initial_panels;
    auto s = detail::gk15<V>(f, lo, hi);
    total += s.value;
    err += s.error;
    heap.push(s);
  }
  int count = initial_panels;
  while (err > std::max(abs_tol, rel_tol * detail::magnitude(total)) && count < max_segments) {
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gk15<V>(f, worst.a, mid);
    auto right = detail::gk15<V>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum to shed the drift from incremental updates.
  total = V{};
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, count};
}

}  // namespace primeap::quad

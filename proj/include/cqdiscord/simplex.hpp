#ifndef CQDISCORD_SIMPLEX_HPP
#define CQDISCORD_SIMPLEX_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace cqd {

template <typename Scalar, int N>
struct SimplexResult {
  Eigen::Matrix<Scalar, N, 1> argmin;
  Scalar value;
  int iterations;
};

template <typename Scalar>
struct SimplexOptions {
  Scalar value_tolerance = Scalar(1e-9);  // stop when max f - min f over the simplex drops below
  int max_iterations = 200;
};

/// Nelder-Mead descent in N dimensions from an axis-aligned starting simplex
/// of edge `step` around `start`. The returned value never exceeds f(start).
template <typename Scalar, int N, typename Objective>
SimplexResult<Scalar, N> nelder_mead(Objective&& f, const Eigen::Matrix<Scalar, N, 1>& start,
                                     const Eigen::Matrix<Scalar, N, 1>& step,
                                     const SimplexOptions<Scalar>& options = {}) {
  using Point = Eigen::Matrix<Scalar, N, 1>;
  constexpr Scalar kReflect = 1, kExpand = 2, kContract = Scalar(0.5), kShrink = Scalar(0.5);

  std::array<Point, N + 1> vertex;
  std::array<Scalar, N + 1> value;
  vertex[0] = start;
  for (int i = 0; i < N; ++i) {
    vertex[i + 1] = start;
    vertex[i + 1][i] += step[i];
  }
  for (int i = 0; i <= N; ++i) value[i] = f(vertex[i]);

  std::array<int, N + 1> order;
  auto sort = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return value[a] < value[b]; });
  };

  int iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    sort();
    const int best = order[0], worst = order[N], second_worst = order[N - 1];
    if (value[worst] - value[best] < options.value_tolerance) break;

    Point centroid = Point::Zero();
    for (int i = 0; i < N; ++i) centroid += vertex[order[i]];
    centroid /= Scalar(N);

    const Point reflected = centroid + kReflect * (centroid - vertex[worst]);
    const Scalar f_reflected = f(reflected);
    if (f_reflected < value[best]) {
      const Point expanded = centroid + kExpand * (reflected - centroid);
      const Scalar f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < value[worst];
    const Point contracted = outside ? Point(centroid + kContract * (reflected - centroid))
                                     : Point(centroid + kContract * (vertex[worst] - centroid));
    const Scalar f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : value[worst])) {
      vertex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    for (int i = 1; i <= N; ++i) {
      const int k = order[i];
      vertex[k] = vertex[best] + kShrink * (vertex[k] - vertex[best]);
      value[k] = f(vertex[k]);
    }
  }
  sort();
  return {vertex[order[0]], value[order[0]], iteration};
}

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <typename Scalar, typename Objective>
std::pair<Scalar, Scalar> golden_section(Objective&& f, Scalar lo, Scalar hi, Scalar x_tolerance) {
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - 1) / 2;
  Scalar c = hi - inv_phi * (hi - lo);
  Scalar d = lo + inv_phi * (hi - lo);
  Scalar fc = f(c), fd = f(d);
  while (hi - lo > x_tolerance) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace cqd

#endif  // CQDISCORD_SIMPLEX_HPP

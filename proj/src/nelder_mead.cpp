#include "qentangle/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qentangle {

namespace {

using Point = std::vector<double>;

Point affine(const Point& base, const Point& toward, double t) {
  Point p(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + t * (toward[i] - base[i]);
  return p;
}

// One simplex run; returns when converged or out of budget.
void run_simplex(const std::function<double(const Point&)>& f, Point& best, double& fbest,
                 double step, const NelderMeadOptions& opt, int& evals) {
  const std::size_t dim = best.size();
  std::vector<Point> x(dim + 1, best);
  std::vector<double> fx(dim + 1, fbest);
  for (std::size_t k = 0; k < dim; ++k) {
    x[k + 1][k] += step;
    fx[k + 1] = f(x[k + 1]);
    ++evals;
  }

  std::vector<std::size_t> idx(dim + 1);
  while (evals < opt.max_evaluations) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fx[a] < fx[b]; });
    {
      std::vector<Point> xs(dim + 1);
      std::vector<double> fs(dim + 1);
      for (std::size_t k = 0; k <= dim; ++k) {
        xs[k] = std::move(x[idx[k]]);
        fs[k] = fx[idx[k]];
      }
      x.swap(xs);
      fx.swap(fs);
    }

    double diameter = 0.0;
    for (std::size_t k = 1; k <= dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) {
        diameter = std::max(diameter, std::abs(x[k][i] - x[0][i]));
      }
    }
    if (fx[dim] - fx[0] <= opt.ftol && diameter <= opt.xtol) break;

    Point centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += x[k][i] / static_cast<double>(dim);
    }

    const Point xr = affine(centroid, x[dim], -1.0);
    const double fr = f(xr);
    ++evals;
    if (fr < fx[0]) {
      const Point xe = affine(centroid, x[dim], -2.0);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        x[dim] = xe;
        fx[dim] = fe;
      } else {
        x[dim] = xr;
        fx[dim] = fr;
      }
    } else if (fr < fx[dim - 1]) {
      x[dim] = xr;
      fx[dim] = fr;
    } else {
      const bool outside = fr < fx[dim];
      const Point xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, x[dim], 0.5);
      const double fc = f(xc);
      ++evals;
      if (fc < (outside ? fr : fx[dim])) {
        x[dim] = xc;
        fx[dim] = fc;
      } else {
        for (std::size_t k = 1; k <= dim; ++k) {
          x[k] = affine(x[0], x[k], 0.5);
          fx[k] = f(x[k]);
          ++evals;
        }
      }
    }
  }

  const auto k = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  if (fx[k] < fbest) {
    best = x[k];
    fbest = fx[k];
  }
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& options) {
  NelderMeadResult result{std::move(x0), 0.0, 1};
  result.value = f(result.x);
  if (result.x.empty()) return result;

  double step = options.initial_step;
  for (int cycle = 0; cycle <= options.restarts && result.evaluations < options.max_evaluations;
       ++cycle) {
    const double before = result.value;
    run_simplex(f, result.x, result.value, step, options, result.evaluations);
    if (cycle > 0 && before - result.value <= options.ftol) break;
    step = std::max(step * 0.1, 1e-4);
  }
  return result;
}

}  // namespace qentangle

#pragma once

#include <functional>
#include <vector>

namespace qentangle {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double ftol = 1e-13;    // stop when the simplex's value spread falls below
  double xtol = 1e-9;     // and its largest vertex distance from the best is below
  int max_evaluations = 4000;
  int restarts = 2;       // fresh simplices around the incumbent after convergence
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int evaluations;
};

/// Minimizes f from x0. The returned value never exceeds f(x0).
NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace qentangle

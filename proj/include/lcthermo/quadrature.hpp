#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lct {

// Vector-valued integrand: writes dim() values at x into out.
using VecIntegrand = std::function<void(double x, double* out)>;

struct QuadOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_intervals = 40000;
};

struct QuadResult {
  std::vector<double> value;
  double error = 0.0;
  int intervals = 0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (10/21) integration of a vector-valued integrand over
// the panels delimited by `breaks` (sorted ascending, finite). If `tail` is
// set, the semi-infinite interval [breaks.back(), inf) is added via the
// substitution x = b / u. Error control uses the max-norm over components,
// relative to the largest component of the result.
QuadResult integrate(const VecIntegrand& f, std::size_t dim, std::vector<double> breaks, bool tail,
                     const QuadOptions& opt = {});

// Scalar convenience wrapper.
double integrate_scalar(const std::function<double(double)>& f, std::vector<double> breaks, bool tail,
                        const QuadOptions& opt = {}, double* error = nullptr);

}  // namespace lct

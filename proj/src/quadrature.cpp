#include "lcthermo/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>

#include "lcthermo/error.hpp"

namespace lct {

namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

struct Interval {
  double a, b;
  bool mapped;  // x = b0 / u on u in (a, b]
  double b0;
  double err;
  std::size_t slot;  // offset into the value store
};

struct ByError {
  bool operator()(const Interval& l, const Interval& r) const { return l.err < r.err; }
};

class Rule {
 public:
  Rule(const VecIntegrand& f, std::size_t dim) : f_(f), dim_(dim), buf_(dim), gsum_(dim) {}

  // Kronrod estimate into k, returns max-norm |K - G|.
  double apply(const Interval& iv, double* k) {
    const auto& xk = gauss_kronrod<double, 21>::abscissa();
    const auto& wk = gauss_kronrod<double, 21>::weights();
    const auto& wg = gauss<double, 10>::weights();
    const double c = 0.5 * (iv.a + iv.b);
    const double h = 0.5 * (iv.b - iv.a);
    std::fill(k, k + dim_, 0.0);
    std::fill(gsum_.begin(), gsum_.end(), 0.0);
    for (std::size_t i = 0; i < xk.size(); ++i) {
      const int signs = xk[i] == 0.0 ? 1 : 2;
      for (int s = 0; s < signs; ++s) {
        const double u = s == 0 ? c + h * xk[i] : c - h * xk[i];
        double jac = h;
        double x = u;
        if (iv.mapped) {
          x = iv.b0 / u;
          jac *= iv.b0 / (u * u);
        }
        f_(x, buf_.data());
        ++evals;
        const double w = wk[i] * jac;
        for (std::size_t d = 0; d < dim_; ++d) k[d] += w * buf_[d];
        if (i % 2 == 1) {
          const double g = wg[i / 2] * jac;
          for (std::size_t d = 0; d < dim_; ++d) gsum_[d] += g * buf_[d];
        }
      }
    }
    double e = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) e = std::max(e, std::abs(k[d] - gsum_[d]));
    return e;
  }

  int evals = 0;

 private:
  const VecIntegrand& f_;
  std::size_t dim_;
  std::vector<double> buf_;
  std::vector<double> gsum_;
};

}  // namespace

QuadResult integrate(const VecIntegrand& f, std::size_t dim, std::vector<double> breaks, bool tail,
                     const QuadOptions& opt) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (breaks.empty() || (breaks.size() < 2 && !tail))
    fail(ErrorCode::Domain, "integrate: need at least one panel");
  if (tail && !(breaks.back() > 0.0)) fail(ErrorCode::Domain, "integrate: tail needs a positive start");

  Rule rule(f, dim);
  std::vector<double> store;
  std::vector<std::size_t> free_slots;
  auto alloc = [&]() {
    if (!free_slots.empty()) {
      const std::size_t s = free_slots.back();
      free_slots.pop_back();
      return s;
    }
    const std::size_t s = store.size();
    store.resize(s + dim);
    return s;
  };

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  std::vector<double> total(dim, 0.0);
  double err_total = 0.0;

  auto push = [&](Interval iv) {
    iv.slot = alloc();
    iv.err = rule.apply(iv, store.data() + iv.slot);
    for (std::size_t d = 0; d < dim; ++d) total[d] += store[iv.slot + d];
    err_total += iv.err;
    heap.push(iv);
  };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a <= 1e-15 * std::max(std::abs(a), std::abs(b))) continue;
    push({a, b, false, 0.0, 0.0, 0});
  }
  if (tail) push({0.0, 1.0, true, breaks.back(), 0.0, 0});

  QuadResult res;
  auto target = [&]() {
    double norm = 0.0;
    for (double v : total) norm = std::max(norm, std::abs(v));
    return std::max(opt.abs_tol, opt.rel_tol * norm);
  };

  while (!heap.empty() && err_total > target() && static_cast<int>(heap.size()) < opt.max_intervals) {
    Interval iv = heap.top();
    const double mid = 0.5 * (iv.a + iv.b);
    if (!(mid > iv.a && mid < iv.b)) break;
    heap.pop();
    for (std::size_t d = 0; d < dim; ++d) total[d] -= store[iv.slot + d];
    err_total -= iv.err;
    free_slots.push_back(iv.slot);
    push({iv.a, mid, iv.mapped, iv.b0, 0.0, 0});
    push({mid, iv.b, iv.mapped, iv.b0, 0.0, 0});
  }

  // Re-sum to shed the drift accumulated by incremental updates.
  std::fill(total.begin(), total.end(), 0.0);
  err_total = 0.0;
  res.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    const Interval& iv = heap.top();
    for (std::size_t d = 0; d < dim; ++d) total[d] += store[iv.slot + d];
    err_total += iv.err;
    heap.pop();
  }
  res.converged = err_total <= target();
  res.value = std::move(total);
  res.error = err_total;
  res.evaluations = rule.evals;
  return res;
}

double integrate_scalar(const std::function<double(double)>& f, std::vector<double> breaks, bool tail,
                        const QuadOptions& opt, double* error) {
  auto r = integrate([&](double x, double* out) { out[0] = f(x); }, 1, std::move(breaks), tail, opt);
  if (error) *error = r.error;
  return r.value[0];
}

}  // namespace lct

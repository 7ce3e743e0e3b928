#include "graphene/numerics/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <queue>
#include <vector>

namespace graphene::numerics {

QuadratureBudgetError::QuadratureBudgetError(const QuadratureResult& best_so_far)
    : std::runtime_error("quadrature-budget-exceeded"), best(best_so_far) {}

namespace {

// Gauss-Kronrod (7,15) nodes and weights, positive half, center last.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double err = 0.0;
  long seq = 0;        // insertion order, for deterministic tie-breaking
  bool at_floor = false;  // cannot be improved by further splitting
};

struct WorstFirst {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.seq > b.seq;
  }
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi,
                 long seq) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);

  const double fc = f(mid);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  double fval[7][2];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fval[j][0] = f(mid - dx);
    fval[j][1] = f(mid + dx);
    const double fsum = fval[j][0] + fval[j][1];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fval[j][0]) + std::abs(fval[j][1]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  // Kronrod average of |f - mean|, the scale against which the raw
  // |K15 - G7| difference is damped (standard QUADPACK heuristic).
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] *
              (std::abs(fval[j][0] - reskh) + std::abs(fval[j][1] - reskh));
  }
  resabs *= half;
  resasc *= half;

  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.seq = seq;
  p.value = resk * half;
  if (!std::isfinite(p.value)) {
    throw std::runtime_error("integrate: non-finite integrand value");
  }
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * DBL_EPSILON * resabs;
  if (err <= floor) {
    err = floor;
    p.at_floor = true;
  }
  if (hi - lo <= 8.0 * DBL_EPSILON * (std::abs(lo) + std::abs(hi))) {
    p.at_floor = true;  // width at the resolution limit
  }
  p.err = err;
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("integrate: bounds must be finite with lo < hi");
  }
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw std::invalid_argument("integrate: rel_tol must be in (0, 1e-2]");
  }

  constexpr long kMaxEvaluations = 2000000;
  long evals = 0;
  long seq = 0;

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> splittable;
  double sum_value = 0.0;
  double sum_err = 0.0;
  double floored_err = 0.0;  // error mass no split can reduce

  auto add_panel = [&](double a, double b) {
    Panel p = eval_panel(f, a, b, seq++);
    evals += 15;
    sum_value += p.value;
    sum_err += p.err;
    if (!p.at_floor) {
      splittable.push(p);
    } else {
      floored_err += p.err;
    }
  };

  add_panel(lo, hi);
  while (sum_err > rel_tol * std::abs(sum_value)) {
    if (splittable.empty()) break;  // every panel at its round-off floor
    if (floored_err > rel_tol * std::abs(sum_value)) {
      break;  // floored panels alone exceed the target: gap unclosable
    }
    if (evals >= kMaxEvaluations) {
      throw QuadratureBudgetError({sum_value, sum_err, evals});
    }
    const Panel worst = splittable.top();
    splittable.pop();
    sum_value -= worst.value;
    sum_err -= worst.err;
    const double mid = 0.5 * (worst.lo + worst.hi);
    add_panel(worst.lo, mid);
    add_panel(mid, worst.hi);
  }
  return {sum_value, sum_err, evals};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lo, double rel_tol) {
  if (!std::isfinite(lo)) {
    throw std::invalid_argument("integrate_semi_infinite: lo must be finite");
  }
  // u = lo - ln(1 - s): s < 1 keeps 1 - s >= 2^-53, so 1/(1 - s) never
  // overflows; a node rounded onto s = 1 exactly contributes measure zero.
  auto g = [&f, lo](double s) -> double {
    const double om = 1.0 - s;
    if (!(om > 0.0)) return 0.0;
    const double fu = f(lo - std::log(om));
    if (fu == 0.0) return 0.0;
    return fu / om;
  };
  return integrate(g, 0.0, 1.0, rel_tol);
}

}  // namespace graphene::numerics

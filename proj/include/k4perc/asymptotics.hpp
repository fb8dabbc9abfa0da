#ifndef K4PERC_ASYMPTOTICS_HPP
#define K4PERC_ASYMPTOTICS_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4perc {

// Scalar apparatus of the threshold analysis: first-moment exponents, the
// critical clique-size constant, the counting-rate function and the proof
// constants, each with the root-finders that pin them down. Everything is
// templated on the floating type so tests can re-run in extended
// precision.

// Bracketed bisection; requires a sign change on [lo, hi].
template <class Real = double>
Real bisect_root(const std::function<Real(Real)>& f, Real lo, Real hi,
                 Real tol = Real(1e-12)) {
  Real flo = f(lo), fhi = f(hi);
  if (flo == Real(0)) return lo;
  if (fhi == Real(0)) return hi;
  if ((flo < Real(0)) == (fhi < Real(0)))
    throw std::invalid_argument("bisect_root: no sign change in bracket");
  for (int it = 0; it < 2000 && hi - lo > tol; ++it) {
    const Real mid = (lo + hi) / 2;
    const Real fm = f(mid);
    if (fm == Real(0)) return mid;
    if ((fm < Real(0)) == (flo < Real(0))) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// First-moment exponent mu(alpha, beta) = 3/2 + beta log(alpha beta)
// - alpha beta^2 / 2 for percolating subgraphs of size beta log n at
// p = sqrt(alpha / (n log n)).
template <class Real = double>
Real mu_exponent(Real alpha, Real beta) {
  if (!(alpha > Real(0)) || !(beta > Real(0)))
    throw std::domain_error("mu_exponent: requires alpha, beta > 0");
  return Real(1.5) + beta * std::log(alpha * beta) - alpha * beta * beta / 2;
}

// Unique zero of mu(alpha, .) in (0, 3); defined for alpha in (0, 1/3).
// mu is strictly decreasing in beta, so bisection on a sign change is
// exact.
inline double beta_star(double alpha, double tol = 1e-12) {
  if (!(alpha > 0.0) || !(alpha < 1.0 / 3.0))
    throw std::domain_error("beta_star: requires 0 < alpha < 1/3");
  const std::function<double(double)> f = [alpha](double b) {
    return mu_exponent(alpha, b);
  };
  return bisect_root<double>(f, 1e-12, 3.0, tol);
}

// Left endpoint of the admissible beta range: (1 - sqrt(1-eps)) / alpha.
template <class Real = double>
Real beta_eps(Real alpha, Real eps) {
  if (!(alpha > Real(0)) || !(eps >= Real(0)) || !(eps <= Real(1)))
    throw std::domain_error("beta_eps: requires alpha > 0, eps in [0,1]");
  return (Real(1) - std::sqrt(Real(1) - eps)) / alpha;
}

namespace detail {

// eps log(eps/e) extended by its limit 0 at eps = 0.
template <class Real>
Real eps_log_eps_over_e(Real eps) {
  if (eps == Real(0)) return Real(0);
  return eps * std::log(eps / std::exp(Real(1)));
}

// x log(e a^2 / x) extended by its limit 0 at x = 0 (x may round to a
// tiny negative at the bracket endpoint).
template <class Real>
Real x_log_ea2_over_x(Real x, Real a) {
  if (x <= Real(0)) return Real(0);
  return x * std::log(std::exp(Real(1)) * a * a / x);
}

}  // namespace detail

// Exponent of the probability that a q-set activates at least k = beta
// log n vertices (q ~ eps (2 alpha)^{-1} log n). Two branches meeting
// continuously at beta = eps/alpha; near the knot both are evaluated and
// must agree to 1e-9.
template <class Real = double>
Real xi_exponent(Real alpha, Real beta, Real eps) {
  if (!(alpha > Real(0)))
    throw std::domain_error("xi_exponent: requires alpha > 0");
  if (!(eps >= Real(0)) || !(eps < Real(1)))
    throw std::domain_error("xi_exponent: requires eps in [0,1)");
  const Real slack = Real(1e-9);
  if (beta < beta_eps(alpha, eps) - slack || beta > Real(1) / alpha + slack)
    throw std::domain_error("xi_exponent: beta outside [beta_eps, 1/alpha]");
  const Real lead = -alpha * beta * beta / 2;
  const Real knot = eps / alpha;
  auto low_branch = [&] {
    const Real x = 2 * alpha * beta - eps;
    return lead + detail::x_log_ea2_over_x(x, alpha * beta) / (2 * alpha);
  };
  auto high_branch = [&] {
    return lead + beta * std::log(alpha * beta) -
           detail::eps_log_eps_over_e(eps) / (2 * alpha);
  };
  if (std::abs(beta - knot) <= Real(1e-12) * std::max(Real(1), knot)) {
    const Real lo = low_branch(), hi = high_branch();
    if (std::abs(lo - hi) > Real(1e-9))
      throw std::logic_error("xi_exponent: branch mismatch at the knot");
    return hi;
  }
  return beta < knot ? low_branch() : high_branch();
}

// Exponent bound for the expected number of minimum-degree-3 percolating
// cores of size q whose 2-neighbour closure reaches beta log n vertices.
// Equals mu for beta >= eps/alpha; below that, mu plus the correction
// term. Also satisfies mu_eps = 3/2 + eps (2 alpha)^{-1} log(eps/e)
// + xi_eps, which the tests check as an independent route.
template <class Real = double>
Real mu_eps_exponent(Real alpha, Real beta, Real eps) {
  if (!(eps >= Real(0)) || !(eps <= 3 * alpha + Real(1e-12)))
    throw std::domain_error("mu_eps_exponent: requires eps in [0, 3 alpha]");
  const Real slack = Real(1e-9);
  if (beta < beta_eps(alpha, eps) - slack || beta > Real(1) / alpha + slack)
    throw std::domain_error(
        "mu_eps_exponent: beta outside [beta_eps, 1/alpha]");
  const Real m = mu_exponent(alpha, beta);
  if (beta >= eps / alpha) return m;
  const Real x = 2 * alpha * beta - eps;
  return m - beta * std::log(alpha * beta) +
         detail::eps_log_eps_over_e(eps) / (2 * alpha) +
         detail::x_log_ea2_over_x(x, alpha * beta) / (2 * alpha);
}

// Per-vertex counting rate psi_eps(y) = max{3/(2e)+eps, (e/2)^{1-2y} y^2}
// for cores of relative size y = q/k. Only meaningful for eps < 1/(2e).
template <class Real = double>
Real psi_rate(Real y, Real eps) {
  const Real e = std::exp(Real(1));
  if (!(y >= Real(0)) || !(y <= Real(1)))
    throw std::domain_error("psi_rate: requires y in [0,1]");
  if (!(eps >= Real(0)) || !(eps < Real(1) / (2 * e)))
    throw std::domain_error("psi_rate: requires eps in [0, 1/(2e))");
  const Real flat = 3 / (2 * e) + eps;
  const Real curved = std::pow(e / 2, 1 - 2 * y) * y * y;
  return std::max(flat, curved);
}

// The knot of psi_eps: the root y* in (0,1) of (e/2)^{1-2y} y^2 =
// 3/(2e)+eps. The curved branch is strictly increasing on (0,1), so the
// root is unique; the root equation itself is re-checked to 1e-9.
inline double psi_knot(double eps, double tol = 1e-12) {
  const double e = std::exp(1.0);
  if (!(eps >= 0.0) || !(eps < 1.0 / (2 * e)))
    throw std::domain_error("psi_knot: requires eps in [0, 1/(2e))");
  const std::function<double(double)> f = [&](double y) {
    return std::pow(e / 2, 1 - 2 * y) * y * y - (3 / (2 * e) + eps);
  };
  const double y = bisect_root<double>(f, 1e-9, 1.0, tol);
  if (std::abs(f(y)) > 1e-9)
    throw std::logic_error("psi_knot: root residual too large");
  return y;
}

// Root eps* in (0, 3 alpha) of 3/2 + eps (2 alpha)^{-1} log(eps/e) = 0,
// equivalently eps (1 - log eps) = 3 alpha.
inline double eps_star(double alpha, double tol = 1e-12) {
  if (!(alpha > 0.0) || !(alpha < 1.0 / 3.0))
    throw std::domain_error("eps_star: requires 0 < alpha < 1/3");
  const std::function<double(double)> f = [alpha](double e) {
    return 1.5 + detail::eps_log_eps_over_e(e) / (2 * alpha);
  };
  return bisect_root<double>(f, 1e-15, 3 * alpha, tol);
}

// Entropy factor of the merge-counting argument, on the simplex
// e1 + e2 + e3 = 1 (e3 derived). Zero-exponent factors take their limit
// value 1.
template <class Real = double>
Real merge_entropy(Real e1, Real e2) {
  const Real e3 = 1 - e1 - e2;
  if (!(e1 > Real(0)) || !(e2 > Real(0)) || e3 < Real(-1e-12))
    throw std::domain_error("merge_entropy: requires e1,e2>0, e1+e2<=1");
  const Real e = std::exp(Real(1));
  auto powxx = [](Real base, Real expo) {
    return expo == Real(0) ? Real(1) : std::pow(base, expo);
  };
  return std::pow(e, 1 - e1 + e3) / powxx(1 - e1, e2) * powxx(e1, 2 * e1) *
         powxx(e2, 2 * e2) * powxx(e3, e3);
}

// merge_entropy along the worst-case ridge e2 = min{e1, 1-e1}, normalized
// by e1 e^{1-e1}. Piecewise: [1/3,1/2] and [1/2,1]; both pieces agree at
// 1/2 and the right piece tends to 1 at e1 = 1.
template <class Real = double>
Real merge_entropy_ridge(Real e1) {
  const Real e = std::exp(Real(1));
  auto powxx = [](Real base, Real expo) {
    return expo == Real(0) ? Real(1) : std::pow(base, expo);
  };
  if (e1 >= Real(1.0) / 3 && e1 <= Real(0.5))
    return powxx(e * (1 - 2 * e1), 1 - 2 * e1) * std::pow(e1, 4 * e1 - 1) /
           std::pow(1 - e1, e1);
  if (e1 > Real(0.5) && e1 <= Real(1))
    return powxx(1 - e1, 1 - e1) * std::pow(e1, 2 * e1 - 1);
  throw std::domain_error("merge_entropy_ridge: requires e1 in [1/3, 1]");
}

// Interior stationary points of the ridge function on [1/3,1/2] and
// [1/2,1), located by bisection on the derivative factor.
inline double ridge_stationary_low() {
  const std::function<double(double)> d = [](double x) {
    return std::log(std::pow(x, 4) / ((1 - x) * (1 - 2 * x) * (1 - 2 * x))) +
           (x * x + x - 1) / (x * (1 - x));
  };
  return bisect_root<double>(d, 1.0 / 3 + 1e-9, 0.5 - 1e-9, 1e-12);
}
inline double ridge_stationary_high() {
  const std::function<double(double)> d = [](double x) {
    return std::log(x * x / (1 - x)) + (x - 1) / x;
  };
  return bisect_root<double>(d, 0.5, 1 - 1e-9, 1e-12);
}

// Exponent for subgraphs of size beta log n carrying ell excess edges:
// -(ell-3)/2 + beta log(alpha beta e^3 / 16).
template <class Real = double>
Real excess_exponent(Real alpha, Real beta, int ell) {
  if (!(alpha > Real(0)) || !(beta > Real(0)))
    throw std::domain_error("excess_exponent: requires alpha, beta > 0");
  const Real e = std::exp(Real(1));
  return -Real(ell - 3) / 2 +
         beta * std::log(alpha * beta * e * e * e / 16);
}

// Exponent for percolating subgraphs of size beta log n with a core of
// relative size y, in terms of psi = psi_eps(y):
// 3/2 + beta log(beta/3) + beta log psi.
template <class Real = double>
Real small_core_exponent(Real beta, Real psi) {
  if (!(beta > Real(0)) || !(psi > Real(0)))
    throw std::domain_error("small_core_exponent: requires beta, psi > 0");
  return Real(1.5) + beta * std::log(beta / 3) + beta * std::log(psi);
}

// Per-size coefficients of the core-counting induction and their case
// sums, evaluated at a given k (the base case of the induction is k = 8).
struct GammaTerms {
  double gamma1, gamma2, gamma3, gamma4, gamma5;
  double sum_base;     // gamma1 + gamma2 + gamma3
  double sum_excess1;  // gamma1 + 2 gamma2 + 3 gamma3 + gamma4
  double sum_excess2;  // gamma1 + 3 gamma2 + 6 gamma3 + 2 gamma4
  double sum_excess3;  // gamma1 + 4 gamma2 + 10 gamma3 + 3 gamma4 + gamma5
};
GammaTerms gamma_terms(int k);

// Full numeric report: named constants plus pass/fail checks against
// their independently tabulated approximate values.
struct ConstantsReport {
  struct Check {
    std::string name;
    double value;
    double expected;
    double tol;
    bool pass;
  };
  int k;
  std::vector<std::pair<std::string, double>> values;
  std::vector<Check> checks;
  bool all_pass;
};
ConstantsReport proof_constants(int k);
std::string constants_report_to_json(const ConstantsReport& report);

}  // namespace k4perc

#endif  // K4PERC_ASYMPTOTICS_HPP

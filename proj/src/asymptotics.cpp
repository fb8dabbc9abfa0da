#include "k4perc/asymptotics.hpp"

#include <cmath>

#include "json.hpp"

namespace k4perc {

GammaTerms gamma_terms(int k) {
  if (k < 8) throw std::domain_error("gamma_terms: requires k >= 8");
  const double e = std::exp(1.0);
  const double zeta = 2 / e;
  const double A = 6 / (std::pow(zeta, 5) * 120 * std::pow(5.0, 5));
  const double kk = k;
  const double p57 = 16 * std::pow(5.0, 7);
  GammaTerms g{};
  g.gamma1 = (1 / kk) * 4 / (std::pow(zeta, 3) * std::pow(e, 3)) +
             (1 / std::pow(kk, 3)) * 4 / (std::pow(zeta, 5) * std::pow(e, 5));
  g.gamma2 = (1 / kk) * A * zeta * p57 / std::pow(e, 4) +
             (1 / std::pow(kk, 3)) * (A / zeta) * p57 / std::pow(e, 6);
  g.gamma3 = (1 / std::pow(kk, 3)) * A * A * std::pow(zeta, 3) *
             std::pow(5.0, 14) * 64 / std::pow(e, 7);
  g.gamma4 = (1 / (kk * kk)) * A * zeta * zeta * p57 / std::pow(e, 3);
  g.gamma5 = (1 / std::pow(kk, 4)) * A * std::pow(zeta, 3) * 6 *
             std::pow(5.0, 8) * 64 / (2 * e * e);
  g.sum_base = g.gamma1 + g.gamma2 + g.gamma3;
  g.sum_excess1 = g.gamma1 + 2 * g.gamma2 + 3 * g.gamma3 + g.gamma4;
  g.sum_excess2 = g.gamma1 + 3 * g.gamma2 + 6 * g.gamma3 + 2 * g.gamma4;
  g.sum_excess3 =
      g.gamma1 + 4 * g.gamma2 + 10 * g.gamma3 + 3 * g.gamma4 + g.gamma5;
  return g;
}

ConstantsReport proof_constants(int k) {
  if (k < 8) throw std::domain_error("proof_constants: requires k >= 8");
  const double e = std::exp(1.0);
  const double zeta = 2 / e;
  const double A = 6 / (std::pow(zeta, 5) * 120 * std::pow(5.0, 5));
  const GammaTerms g = gamma_terms(k);
  const double y_hat = psi_knot(0.0);
  const double x1 = ridge_stationary_low();
  const double x2 = ridge_stationary_high();
  const double extra_low = 2 * std::log((2.0 / 3) * e * e * e / 16);
  const double extra_high = 9 * std::log(3 * e * e * e / 16);
  const double ridge_convexity = 1.5 * (3 + 2 * std::log(3 / (4 * e)));
  const double flat_exponent = 1 + 2 * std::log(3 / (2 * e));
  const double sqrt21 = (std::sqrt(21.0) - 3) / 2;

  ConstantsReport r;
  r.k = k;
  r.values = {
      {"zeta_const", zeta},
      {"A", A},
      {"gamma1", g.gamma1},
      {"gamma2", g.gamma2},
      {"gamma3", g.gamma3},
      {"gamma4", g.gamma4},
      {"gamma5", g.gamma5},
      {"case_sum_base", g.sum_base},
      {"case_sum_excess1", g.sum_excess1},
      {"case_sum_excess2", g.sum_excess2},
      {"case_sum_excess3", g.sum_excess3},
      {"y_hat", y_hat},
      {"ridge_x1", x1},
      {"ridge_x2", x2},
      {"ridge_at_third", merge_entropy_ridge(1.0 / 3)},
      {"ridge_at_half", merge_entropy_ridge(0.5)},
      {"ridge_at_one", merge_entropy_ridge(1.0)},
      {"excess_exponent_beta2", extra_low},
      {"excess_exponent_beta9", extra_high},
      {"ridge_convexity_bound", ridge_convexity},
      {"flat_exponent_bound", flat_exponent},
      {"sqrt21_threshold", sqrt21},
  };

  auto check = [&r](const std::string& name, double value, double expected,
                    double tol) {
    r.checks.push_back({name, value, expected, tol,
                        std::abs(value - expected) <= tol});
  };
  if (k == 8) {
    check("case_sum_base", g.sum_base, 0.23, 0.02);
    check("case_sum_excess1", g.sum_excess1, 0.43, 0.02);
    check("case_sum_excess2", g.sum_excess2, 0.63, 0.02);
    check("case_sum_excess3", g.sum_excess3, 0.90, 0.02);
  }
  check("cases_below_one_base", g.sum_base < 1 ? 1.0 : 0.0, 1.0, 0.5);
  check("cases_below_one_excess3", g.sum_excess3 < 1 ? 1.0 : 0.0, 1.0, 0.5);
  check("y_hat", y_hat, 0.819, 0.003);
  check("ridge_x1", x1, 0.439, 0.003);
  check("ridge_x2", x2, 0.692, 0.003);
  check("excess_exponent_beta2", extra_low, -0.356, 0.003);
  check("excess_exponent_beta9", extra_high, 11.934, 0.003);
  check("ridge_convexity_bound", ridge_convexity, 0.637, 0.003);
  check("flat_exponent_bound", flat_exponent, -0.189, 0.003);
  check("sqrt21_threshold", sqrt21, 0.791, 0.003);
  check("ridge_at_third", merge_entropy_ridge(1.0 / 3),
        std::pow(e / 6, 1.0 / 3), 1e-10);
  check("ridge_at_half", merge_entropy_ridge(0.5), 1 / std::sqrt(2.0), 1e-10);
  check("ridge_at_one", merge_entropy_ridge(1.0), 1.0, 1e-10);
  check("A_in_unit_interval", (A > 0 && A < 1) ? 1.0 : 0.0, 1.0, 0.5);
  check("zeta_in_unit_interval", (zeta > 0 && zeta < 1) ? 1.0 : 0.0, 1.0, 0.5);

  r.all_pass = true;
  for (const auto& c : r.checks) r.all_pass = r.all_pass && c.pass;
  return r;
}

std::string constants_report_to_json(const ConstantsReport& report) {
  nlohmann::json j;
  j["k"] = report.k;
  j["all_pass"] = report.all_pass;
  nlohmann::json vals;
  for (const auto& [name, value] : report.values) vals[name] = value;
  j["values"] = vals;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"value", c.value},
                           {"expected", c.expected},
                           {"tol", c.tol},
                           {"pass", c.pass}});
  return j.dump(2);
}

}  // namespace k4perc

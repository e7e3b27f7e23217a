#include "bounds.hpp"

#include <algorithm>
#include <cmath>

namespace hypercover {

namespace {

constexpr double kOneMinusInvE = 1.0 - 0.36787944117144233;  // 1 - 1/e

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_prefix_args(uint64_t i, double delta, uint64_t N) {
  if (i == 0) throw Error(ErrorCode::invalid_argument, "prefix length must be positive");
  if (N < i) throw Error(ErrorCode::invalid_argument, "horizon smaller than prefix");
  if (!(delta > 0.0 && delta < 1.0))
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0,1)");
}

}  // namespace

int64_t f_requirement(int64_t d_s, uint32_t k, uint32_t max_degree) {
  return d_s + static_cast<int64_t>(k) * max_degree;
}

int64_t f_topk(int64_t d_s, int64_t top_k_sum) { return d_s + top_k_sum; }

double f_df2d_at(double alpha, int64_t d_s, uint32_t k, uint32_t max_degree,
                 std::span<const CovTerm> terms) {
  double t = max_degree;
  for (const CovTerm& c : terms) t = std::max(t, c.d - alpha * c.s);
  return k * t + alpha * static_cast<double>(d_s);
}

double f_df2d(int64_t d_s, uint32_t k, uint32_t max_degree, std::span<const CovTerm> terms,
              double* alpha_out) {
  const auto g = [&](double a) { return f_df2d_at(a, d_s, k, max_degree, terms); };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (g(m1) <= g(m2))
      hi = m2;
    else
      lo = m1;
  }
  const double mid = 0.5 * (lo + hi);
  double best_a = mid, best = g(mid);
  for (double a : {0.0, 1.0}) {
    const double v = g(a);
    if (v < best) {
      best = v;
      best_a = a;
    }
  }
  if (alpha_out) *alpha_out = best_a;
  return best;
}

double f_lower(uint64_t i, double mu_hat, double delta, uint64_t N) {
  check_prefix_args(i, delta, N);
  const double mu = clamp01(mu_hat);
  const double c = std::log(1.0 / delta) / static_cast<double>(i);
  const double a = static_cast<double>(i) / static_cast<double>(N);
  double best = 1.0;
  if (c < 3.0) best = mu + (mu - 1.0) * c / (3.0 - c);  // pole at c = 3; branch useless beyond
  const double base = 3.0 + a * (mu - 1.0);
  const double rad = std::sqrt(c * c * base * base + 18.0 * a * c * mu * (1.0 - mu));
  const double cand =
      (3.0 * c + 3.0 * a * mu - a * c * (mu + 1.0) - rad) / (c * (6.0 - 2.0 * a) + 3.0 * a);
  best = std::min(best, cand);
  return clamp01(best);
}

double f_upper(uint64_t i, double mu_hat, double delta, uint64_t N) {
  check_prefix_args(i, delta, N);
  const double mu = clamp01(mu_hat);
  const double c = std::log(1.0 / delta) / static_cast<double>(i);
  const double a = static_cast<double>(i) / static_cast<double>(N);
  const double b1 = mu + (1.0 - mu) * c / (3.0 + c);
  const double base = 3.0 + a * (1.0 - mu);
  const double rad = std::sqrt(c * c * base * base + 18.0 * a * c * mu * (1.0 - mu));
  const double b2 =
      (3.0 * c + 3.0 * a * mu + a * c * (1.0 + mu) + rad) / (c * (6.0 + 2.0 * a) + 3.0 * a);
  return clamp01(std::max(b1, b2));
}

uint64_t required_samples(double eps, double delta, double mu) {
  if (!(eps > 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0,1)");
  if (!(mu > 0.0)) throw Error(ErrorCode::invalid_argument, "mu must be positive");
  const double v = (8.0 / 3.0) * std::log(2.0 / delta) / (mu * eps * eps);
  if (!(v < 9.0e18)) throw Error(ErrorCode::domain, "required sample count overflows");
  return static_cast<uint64_t>(std::ceil(v));
}

GuaranteeParams derive_params(uint64_t n, uint32_t k, double eps, double delta, double alpha,
                              double beta) {
  if (k < 1 || static_cast<uint64_t>(k) >= n)
    throw Error(ErrorCode::invalid_argument, "need 1 <= k < n");
  if (!(eps > 0.0 && eps < kOneMinusInvE))
    throw Error(ErrorCode::invalid_argument, "eps must lie in (0, 1-1/e)");
  if (!(delta > 0.0 && delta < 1.0))
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0,1)");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw Error(ErrorCode::invalid_argument, "grid spacings must be positive");

  GuaranteeParams P;
  P.n = n;
  P.k = k;
  P.eps = eps;
  P.delta = delta;
  P.alpha = alpha;
  P.beta = beta;
  P.log_choose = std::lgamma(static_cast<double>(n) + 1.0) -
                 std::lgamma(static_cast<double>(k) + 1.0) -
                 std::lgamma(static_cast<double>(n - k) + 1.0);

  // eps2 appears on both sides (the union-bound mass p depends on the grid
  // size, which depends on eps2); iterate the fixed point
  const auto step = [&](double e2, double* c_out, double* p_out) {
    const double c = (1.0 + e2) / ((1.0 - e2) * kOneMinusInvE);
    const double p = 4.0 * (1.0 + std::ceil(std::log(c) / std::log1p(alpha))) / delta;
    const double lp = std::log(p);
    *c_out = c;
    *p_out = p;
    return std::sqrt(lp + P.log_choose) /
           (kOneMinusInvE * std::sqrt(lp) + std::sqrt(lp + P.log_choose)) * eps / (1.0 + alpha);
  };

  double eps2 = eps / (1.0 + alpha);
  double c = 0.0, p = 0.0;
  for (int it = 0; it < 256; ++it) {
    const double next = step(eps2, &c, &p);
    const bool done = std::abs(next - eps2) < 1e-12;
    eps2 = next;
    if (done) break;
  }
  if (std::abs(step(eps2, &c, &p) - eps2) > 1e-9)
    throw Error(ErrorCode::internal, "accuracy split did not converge");
  P.eps2 = eps2;
  P.c = c;
  P.p = p;
  if (!(eps2 > 0.0 && eps2 < eps) || !(c > 1.0))
    throw Error(ErrorCode::internal, "accuracy split out of range");

  const double z_real = std::ceil((1.0 + eps2) / kOneMinusInvE *
                                  (2.0 + (2.0 / 3.0) * eps2 * (1.0 - alpha)) / (eps2 * eps2) *
                                  (std::log(p) + P.log_choose));
  if (!(z_real >= 2.0 && z_real < 4.0e18))
    throw Error(ErrorCode::domain, "derived threshold out of range");
  P.z_star = static_cast<int64_t>(z_real);

  // coverage of any feasible set is at least k/n, which caps the sample count
  // the assessment can ever need
  P.t_star = z_real * kOneMinusInvE * (1.0 + alpha) * (1.0 + alpha) * static_cast<double>(n) /
             ((1.0 + eps2) * static_cast<double>(k));

  const double i0_real =
      std::ceil(std::log2(z_real * eps * eps / ((2.0 + (2.0 / 3.0) * eps) * std::log(1.0 / delta))));
  P.i0 = i0_real <= 0.0 ? 0u : static_cast<uint32_t>(std::min(i0_real, 62.0));

  const double checkpoints = std::log(P.c * P.t_star) / std::log1p(beta);
  P.delta_prime = delta / (2.0 * std::log2(z_real) * checkpoints);
  if (!(P.delta_prime > 0.0 && P.delta_prime < delta))
    throw Error(ErrorCode::internal, "checkpoint confidence share out of range");

  P.rho_k = 1.0 - std::pow(1.0 - 1.0 / static_cast<double>(k), static_cast<double>(k));
  if (!(P.rho_k >= 0.5 && P.rho_k >= kOneMinusInvE - 1e-12))
    throw Error(ErrorCode::internal, "per-run approximation factor out of range");
  return P;
}

}  // namespace hypercover

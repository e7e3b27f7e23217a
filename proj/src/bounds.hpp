#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace hypercover {

// Upper bounds on how much coverage any k-set could still reach given the
// current retained edges, and anytime confidence bounds on a coverage
// fraction estimated from a sample prefix.

// ---- sketch-state bounds ------------------------------------------------

// d_s + k * max live degree
int64_t f_requirement(int64_t d_s, uint32_t k, uint32_t max_degree);

// d_s + sum of the k largest live degrees
int64_t f_topk(int64_t d_s, int64_t top_k_sum);

// One (D_i, S_i) pair per node with covered_count > 0:
//   D_i = live degree + covered count, S_i = covered count.
// Nodes never seen in a covered edge are dominated by the global live-degree
// maximum, so they don't need explicit terms.
struct CovTerm {
  double d;
  double s;
};

// g(alpha) = k * max(max_degree, max_i (D_i - alpha*S_i)) + alpha * d_s
double f_df2d_at(double alpha, int64_t d_s, uint32_t k, uint32_t max_degree,
                 std::span<const CovTerm> terms);

// min over alpha in [0,1] of g(alpha); convex, solved by ternary search plus
// both endpoints (g(1) equals f_requirement exactly)
double f_df2d(int64_t d_s, uint32_t k, uint32_t max_degree, std::span<const CovTerm> terms,
              double* alpha_out = nullptr);

// ---- anytime confidence bounds ------------------------------------------
//
// mu_hat is the empirical coverage fraction after i of at most N draws; the
// returned bounds hold for every prefix i <= N simultaneously with
// probability 1 - delta (one-sided each). Both are clamped to [0, 1].

double f_lower(uint64_t i, double mu_hat, double delta, uint64_t N);
double f_upper(uint64_t i, double mu_hat, double delta, uint64_t N);

// samples sufficient for a (1 +/- eps) estimate of a mean >= mu at confidence
// 1 - delta
uint64_t required_samples(double eps, double delta, double mu);

// ---- guarantee parameter derivation --------------------------------------

struct GuaranteeParams {
  uint64_t n = 0;
  uint32_t k = 0;
  double eps = 0;
  double delta = 0;
  double alpha = 0.1;  // geometric spacing of the threshold grid
  double beta = 0.1;   // geometric spacing of assessment checkpoints
  double eps2 = 0;     // per-run accuracy share (fixed point)
  double c = 0;        // relative width of the threshold range
  double p = 0;        // union-bound mass over grid steps
  double log_choose = 0;
  int64_t z_star = 0;  // largest grid threshold
  double t_star = 0;   // sample-count ceiling used in the checkpoint budget
  uint32_t i0 = 0;     // grid starts at ceil(z_star / 2^i0)
  double delta_prime = 0;
  double rho_k = 0;  // 1 - (1 - 1/k)^k
};

// pre: 1 <= k < n, 0 < eps < 1 - 1/e, 0 < delta < 1
GuaranteeParams derive_params(uint64_t n, uint32_t k, double eps, double delta,
                              double alpha = 0.1, double beta = 0.1);

}  // namespace hypercover

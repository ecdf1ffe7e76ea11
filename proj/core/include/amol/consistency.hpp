#pragma once

#include <string>
#include <vector>

#include "amol/param.hpp"

namespace amol {

struct SupSums {
  double ab = 0.0;  // sup over lambda in A of sum over mu in B of omega(lambda, mu)^-k
  double ba = 0.0;  // sup over mu in B of sum over lambda in A of omega(lambda, mu)^-k
};

// Exact double loop over two explicit index sets; locations compared on a
// torus of side `period`.
SupSums sup_sums(const std::vector<ParamPoint>& A, const std::vector<ParamPoint>& B, double alpha,
                 double k, double period);

struct ConsistencyOptions {
  // Outer sets up to this many indices are used whole; larger ones are
  // replaced by a probe set: every index of the coarsest `probe_scales`
  // scales plus `probes_per_scale` evenly spaced indices of each finer scale.
  int exact_limit = 4096;
  int probe_scales = 2;
  int probes_per_scale = 6;
};

struct ConsistencyRung {
  Truncation truncation;
  double sup_ab = 0.0;
  double sup_ba = 0.0;
  double increment = 0.0;  // relative growth over the previous rung (max of both directions)
  bool exact_sup = true;   // false when the outer sup ran over a probe set
  std::int64_t size_a = 0, size_b = 0;
};

ConsistencyRung consistency_sum(const Parametrization& A, const Parametrization& B, double alpha,
                                double k, const Truncation& truncation,
                                const ConsistencyOptions& opt = {});

struct ConsistencyReport {
  double k = 0.0;
  double alpha = 0.0;
  std::vector<ConsistencyRung> rungs;
  double last_increment = 0.0;
  std::string verdict;  // consistent | divergent-suspect | inconclusive
};

// Increments are relative to the previous rung. "divergent-suspect" when the
// absolute increments grow over the last three rungs.
ConsistencyReport consistency_ladder(const Parametrization& A, const Parametrization& B,
                                     double alpha, double k,
                                     const std::vector<Truncation>& ladder,
                                     const ConsistencyOptions& opt = {});

// Rung r uses max scale start.max_scale + r on the fixed window start.window.
ConsistencyReport saturation_ladder(const Parametrization& A, const Parametrization& B,
                                    double alpha, double k, int rungs, const Truncation& start,
                                    const ConsistencyOptions& opt = {});

struct ScaleSumFit {
  std::vector<double> ratio;  // s_lambda / s_mu (>= 1)
  std::vector<double> sum;    // sup over coarsest-scale mu of sum over lambda at that scale of (1+d)^-N
  double slope = 0.0;         // log-log slope of sum against ratio
  double intercept = 0.0;
};

// Per-scale sums over lambda in A at each scale above the coarsest scale of
// B, for mu on B's coarsest scale.
ScaleSumFit per_scale_sums(const Parametrization& A, const Parametrization& B, double alpha,
                           double N, const Truncation& truncation);

}  // namespace amol

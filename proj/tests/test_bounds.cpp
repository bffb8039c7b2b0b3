// Copyright 2026 The pauliprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pauliprobe/bounds.hpp"
#include "pauliprobe/covering.hpp"
#include "pauliprobe/errors.hpp"
#include "reference.hpp"

namespace pp = pauliprobe;
using pp::PauliString;

namespace {

// Direct summation in plain doubles (small n only).
double direct_f(int n, int w, double x) {
  double s = 0.0;
  for (int u = 0; u <= w; ++u) s += reference::binom(n, u) * std::pow(3.0 * x, u);
  return s / std::pow(1.0 + x, n);
}

}  // namespace

TEST(PrE, ValuesAndNormalization) {
  EXPECT_DOUBLE_EQ(pp::pr_e(PauliString(2), 1.0), 1.0 / 16);
  for (int n = 1; n <= 4; ++n) {
    for (double x : {0.25, 0.5, 1.0}) {
      double total = 0.0;
      double prev = 2.0;
      for (std::uint64_t e = 0; e < (std::uint64_t{1} << (2 * n)); ++e) total += pp::pr_e(PauliString::from_index(n, e), x);
      for (int u = 0; u <= n; ++u) {
        EXPECT_LE(pp::pr_e_weight(n, u, x), prev);
        prev = pp::pr_e_weight(n, u, x);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
  EXPECT_THROW(pp::pr_e(PauliString(2), 0.0), pp::RangeError);
  EXPECT_THROW(pp::pr_e(PauliString(2), 1.5), pp::RangeError);
}

TEST(PrLearnable, Values) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(pp::pr_learnable(n, n, 0.4), 1.0);
  EXPECT_NEAR(pp::pr_learnable(3, 0, 1.0), 1.0 / 64, 1e-15);
  for (int n = 1; n <= 10; ++n) {
    for (double x : {0.1, 0.5, 1.0}) {
      double prev = 0.0;
      for (int w = 0; w <= n; ++w) {
        const double v = pp::pr_learnable(n, w, x);
        EXPECT_GE(v, prev);
        prev = v;
      }
    }
  }
}

TEST(Fw, ClosedValues) {
  for (int n = 1; n <= 10; ++n) EXPECT_NEAR(pp::f_w(n, n, 1.0), std::ldexp(1.0, n), 1e-12 * std::ldexp(1.0, n));
  EXPECT_NEAR(pp::f_w(4, 2, 1.0), 67.0 / 16.0, 1e-13);
  for (int n = 1; n <= 12; ++n) {
    for (int w = 0; w <= n; ++w) {
      for (double x : {0.05, 0.3, 1.0}) EXPECT_NEAR(pp::f_w(n, w, x) / direct_f(n, w, x), 1.0, 1e-12);
    }
  }
}

TEST(Fw, FullSumIdentityInLogSpace) {
  for (int n = 1; n <= 200; ++n) {
    for (double x : {0.01, 0.2, 0.7, 1.0}) {
      const double lhs = pp::log_f_w(n, n, x) + n * std::log1p(x);
      const double rhs = n * std::log1p(3.0 * x);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs));
    }
  }
  EXPECT_TRUE(std::isfinite(pp::log_f_w(10000, 5000, 1.0)));
}

TEST(Fw, BracketAtOptimalX) {
  for (int n = 2; n <= 40; ++n) {
    for (int w = 1; 2 * w <= n; ++w) {
      const double x = pp::optimal_x(n, w).x;
      const double f = pp::f_w(n, w, x);
      const double three_w = std::pow(3.0, w);
      EXPECT_GE(f, three_w / std::sqrt(2.0 * n) * (1 - 1e-12)) << n << " " << w;
      // w+1 terms in the partial sum
      EXPECT_LE(f, (w + 1) * three_w / std::sqrt(std::numbers::pi) * (1 + 1e-12)) << n << " " << w;
    }
  }
}

TEST(Fw, BracketAboveTheMode) {
  for (int n = 2; n <= 40; ++n) {
    for (int i = 1; i <= 20; ++i) {
      const double x = i / 20.0;
      const double full = std::pow((1.0 + 3.0 * x) / (1.0 + x), n);
      for (int w = 0; w <= n; ++w) {
        if (w < n * 3.0 * x / (1.0 + 3.0 * x)) continue;
        const double f = pp::f_w(n, w, x);
        EXPECT_GE(f, full / std::sqrt(2.0 * n) * (1 - 1e-12));
        EXPECT_LE(f, (w + 1) / std::sqrt(std::numbers::pi) * full * (1 + 1e-12));
      }
    }
  }
}

TEST(OptimalX, Values) {
  EXPECT_DOUBLE_EQ(pp::optimal_x(4, 2).x, 1.0);
  EXPECT_DOUBLE_EQ(pp::optimal_x(10, 5).x, 1.0);
  EXPECT_NEAR(pp::optimal_x(4, 1).x, 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(pp::optimal_x(6, 6).x, 1.0);
  const auto degenerate = pp::optimal_x(4, 0);
  EXPECT_TRUE(degenerate.degenerate);
  EXPECT_DOUBLE_EQ(degenerate.x, pp::kOptimalXFloor);
  EXPECT_FALSE(pp::optimal_x(4, 1).degenerate);
}

// x~2 is within the bracket factor of the best grid value.
TEST(OptimalX, NearOptimalOnGrid) {
  for (int n = 2; n <= 30; ++n) {
    for (int w = 1; w <= n; ++w) {
      double best = 0.0;
      for (int i = 1; i <= 100; ++i) best = std::max(best, pp::f_w(n, w, i / 100.0));
      const double at_opt = pp::f_w(n, w, pp::optimal_x(n, w).x);
      if (2 * w > n) {
        EXPECT_GE(at_opt, best * (1 - 1e-12)) << n << " " << w;
      } else {
        EXPECT_GE(at_opt, best * std::sqrt(std::numbers::pi) / ((w + 1) * std::sqrt(2.0 * n))) << n << " " << w;
      }
    }
  }
}

TEST(LowerBound, Values) {
  EXPECT_NEAR(pp::lower_bound_N({4, 0, 4, 0.1, 0.05}), 360.0, 1e-9);
  EXPECT_NEAR(pp::lower_bound_N({8, 0, 8, 0.1, 0.05}), 5760.0, 1e-9);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_NEAR(pp::lower_bound_N({n, 0, n, 0.2, 0.1}) / ((1 - 0.2) / (4 * 0.04) * std::ldexp(1.0, n)), 1.0, 1e-12);
  }
  EXPECT_THROW(pp::lower_bound_N({4, 5, 2, 0.1, 0.05}), pp::RangeError);
  EXPECT_THROW(pp::lower_bound_N({4, 0, 2, 0.1, 0.5}), pp::RangeError);
  EXPECT_THROW(pp::lower_bound_N({4, 0, 2, 0.0, 0.1}), pp::RangeError);
}

TEST(LowerBound, Monotone) {
  for (int n = 1; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int w = 0; w <= n; ++w) {
        const double v = pp::lower_bound_N({n, k, w, 0.1, 0.05});
        if (k < n) {
          const double next_k = pp::lower_bound_N({n, k + 1, w, 0.1, 0.05});
          EXPECT_LE(next_k, v);
          EXPECT_NEAR(next_k, v / 2, 1e-12 * v);
        }
        if (w < n) {
          EXPECT_GE(pp::lower_bound_N({n, k, w + 1, 0.1, 0.05}), v * (1 - 1e-12));
        }
      }
    }
  }
}

TEST(UpperBound, DominatesLowerOnGrid) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int w = 1; w <= n; ++w) {
        const pp::BoundQuery q{n, k, w, 0.1, 0.05};
        EXPECT_GE(pp::upper_bound_N(q), pp::lower_bound_N(q)) << n << k << w;
      }
    }
  }
}

TEST(UpperBound, FullAncillaCollapse) {
  const int n = 6;
  const double per_copy = 2.0 / (0.1 * 0.1) * std::log(2.0 / 0.05);
  for (int w = 1; w <= n; ++w) {
    double groups = 0.0;
    for (int u = 0; u <= w; ++u) {
      const double p = static_cast<double>(pp::count_paulis_of_weight(n, u));
      groups += std::max(1.0, std::ceil(std::log(p)));
    }
    EXPECT_NEAR(pp::upper_bound_N({n, n, w, 0.1, 0.05}), n * groups * per_copy, 1e-6);
  }
}

TEST(UpperBound, MeasuredSigmaOverridesTopClass) {
  const pp::BoundQuery q{4, 0, 3, 0.1, 0.05};
  const double formula = pp::upper_bound_N(q);
  const double measured = pp::upper_bound_N(q, 8.0);
  EXPECT_LT(measured, formula);
  EXPECT_DOUBLE_EQ(pp::upper_bound_N(q, pp::sigma_formula(4, 0, 3).value), formula);
}

TEST(UpperBound, LowWeightScaling) {
  // k = 0, w <= n/2: ratio to n^2 3^w stays within a log factor
  for (int n = 4; n <= 24; n += 4) {
    for (int w = 1; 2 * w <= n; ++w) {
      const double r = pp::upper_bound_N({n, 0, w, 0.1, 0.05}) / (n * n * std::pow(3.0, w) * 200 * std::log(40.0));
      EXPECT_GT(r, 0.1);
      EXPECT_LT(r, 2.0 * std::log(static_cast<double>(pp::count_paulis_of_weight(n, w))) + 2.0);
    }
  }
}

TEST(Stirling, Brackets) {
  const auto [lo, hi] = pp::stirling_brackets(10, 5);
  EXPECT_LE(lo, 252.0);
  EXPECT_GE(hi, 252.0);
  for (int n = 2; n <= 60; ++n) {
    for (int u = 1; u < n; ++u) {
      const auto [l, h] = pp::stirling_brackets(n, u);
      const double c = static_cast<double>(pp::binomial(n, u));
      EXPECT_LE(l, c * (1 + 1e-12)) << n << " " << u;
      EXPECT_GE(h, c * (1 - 1e-12)) << n << " " << u;
    }
  }
  EXPECT_EQ(pp::stirling_brackets(7, 7), std::make_pair(1.0, 1.0));
  EXPECT_EQ(pp::stirling_brackets(7, 0), std::make_pair(1.0, 1.0));
  EXPECT_THROW(pp::stirling_brackets(7, 8), pp::RangeError);
}

TEST(WeightedSum, ClosedForm) {
  EXPECT_DOUBLE_EQ(pp::weighted_sum_max_eigenvalue(1, 1.0), 0.5);
  EXPECT_NEAR(pp::weighted_sum_max_eigenvalue(2, 0.5), 0.36, 1e-15);
  EXPECT_NEAR(pp::weighted_sum_max_eigenvalue(5, 1e-9), 1.0, 1e-7);
}

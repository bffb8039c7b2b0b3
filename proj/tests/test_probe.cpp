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

#include <cmath>
#include <numeric>

#include "pauliprobe/channel.hpp"
#include "pauliprobe/errors.hpp"
#include "pauliprobe/probe.hpp"
#include "reference.hpp"

namespace pp = pauliprobe;
using pp::PauliString;

TEST(Overlap, AlphaProbeExamples) {
  for (double alpha : {0.0, 0.3, 1.0}) {
    EXPECT_DOUBLE_EQ(pp::overlap_E(pp::AlphaProbe{3, alpha}, PauliString(3)), 1.0);
  }
  EXPECT_DOUBLE_EQ(pp::overlap_E(pp::AlphaProbe{3, 0.0}, PauliString::parse("XYZ")), 1.0 / 27.0);
  EXPECT_THROW(pp::overlap_E(pp::AlphaProbe{3, 0.5}, PauliString::parse("XY")), pp::DimensionError);
}

TEST(Overlap, WernerProbe) {
  EXPECT_DOUBLE_EQ(pp::overlap_E(pp::WernerProbe{2, 1.0}, PauliString::parse("XZ")), 1.0);
  for (double lam : {0.0, 0.2, 0.9}) {
    EXPECT_NEAR(pp::overlap_E(pp::WernerProbe{2, lam}, PauliString(2)), 1.0, 1e-12);
  }
  EXPECT_NEAR(pp::overlap_E(pp::WernerProbe{1, 0.0}, PauliString::parse("X")), -1.0 / 3.0, 1e-15);
}

TEST(Overlap, IsTransformOfCoefficients) {
  for (int n = 1; n <= 3; ++n) {
    for (double alpha : {0.0, 0.25, 0.7, 1.0}) {
      const pp::AlphaProbe probe{n, alpha};
      std::vector<double> c2(std::size_t{1} << (2 * n));
      for (std::uint64_t a = 0; a < c2.size(); ++a) c2[a] = pp::coefficient_sq(probe, reference::weight(a, n));
      EXPECT_NEAR(std::accumulate(c2.begin(), c2.end(), 0.0), 1.0, 1e-12);
      const auto e = reference::naive_transform(c2, n);
      for (std::uint64_t b = 0; b < c2.size(); ++b) {
        EXPECT_NEAR(e[b], pp::overlap_E(probe, PauliString::from_index(n, b)), 1e-12);
      }
    }
  }
}

TEST(ProbeConstruction, RangeChecks) {
  EXPECT_THROW(pp::make_alpha_probe(2, 1.5), pp::RangeError);
  EXPECT_THROW(pp::make_alpha_probe(2, -0.1), pp::RangeError);
  EXPECT_THROW(pp::make_werner_probe(0, 0.5), pp::RangeError);
  EXPECT_THROW(pp::entanglement_entropy(pp::AlphaProbe{2, 1.2}), pp::RangeError);
}

TEST(Entropy, EndpointsExact) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(pp::entanglement_entropy(pp::AlphaProbe{n, 1.0}), static_cast<double>(n));
    EXPECT_EQ(pp::entanglement_entropy(pp::AlphaProbe{n, 0.0}), 0.0);
  }
}

TEST(Entropy, SpectrumTraceAndMonotone) {
  for (int n = 1; n <= 12; ++n) {
    double prev = -1.0;
    for (int i = 0; i <= 10; ++i) {
      const double alpha = i / 10.0;
      const auto s = pp::rdm_spectrum(pp::AlphaProbe{n, alpha});
      EXPECT_NEAR(s.q_multiplicity * s.q + s.big_q, 1.0, 1e-12);
      const double d = std::ldexp(1.0, n);
      const double a = std::sqrt(alpha + (1 - alpha) / d), b = std::sqrt((1 - alpha) / d);
      EXPECT_NEAR(s.q, (a - b) * (a - b) / d, 1e-12);
      EXPECT_NEAR(s.big_q, (a + (d - 1) * b) * (a + (d - 1) * b) / d, 1e-12);
      const double h = pp::entanglement_entropy(pp::AlphaProbe{n, alpha});
      EXPECT_GE(h, prev);
      prev = h;
    }
  }
}

TEST(EntanglementOfFormation, Values) {
  EXPECT_DOUBLE_EQ(pp::eof_werner(pp::WernerProbe{4, 1.0}), 4.0);
  EXPECT_DOUBLE_EQ(pp::eof_window_lower_edge(2), 0.75);
  EXPECT_NEAR(pp::eof_werner(pp::WernerProbe{2, 0.75}), 2.0 - 0.5 * std::log2(3.0), 1e-12);
  double prev = -1.0;
  for (double lam = pp::eof_window_lower_edge(3); lam <= 1.0; lam += 0.01) {
    const double v = pp::eof_werner(pp::WernerProbe{3, lam});
    EXPECT_GT(v, prev);
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 3.0);
    prev = v;
  }
  const double mid = pp::eof_werner(pp::WernerProbe{3, 0.9});
  EXPECT_GT(mid, 0.0);
  EXPECT_LT(mid, 3.0);
  EXPECT_THROW(pp::eof_werner(pp::WernerProbe{1, 1.0}), pp::DomainError);
  EXPECT_THROW(pp::eof_werner(pp::WernerProbe{2, 0.7}), pp::DomainError);
}

TEST(OutcomeDistribution, LimitingCases) {
  const auto id = pp::identity_channel(2);
  const auto bell = pp::bell_outcome_distribution(id, pp::AlphaProbe{2, 1.0});
  for (std::size_t v = 0; v < 16; ++v) EXPECT_NEAR(bell[v], v == 0 ? 1.0 : 0.0, 1e-15);

  const auto dep = pp::depolarizing_channel(2);
  for (const pp::Probe probe : {pp::Probe{pp::AlphaProbe{2, 0.3}}, pp::Probe{pp::WernerProbe{2, 0.6}}}) {
    const auto pr = pp::bell_outcome_distribution(dep, probe);
    for (std::size_t v = 0; v < 16; ++v) EXPECT_NEAR(pr[v], 1.0 / 16, 1e-15);
  }
  EXPECT_THROW(pp::bell_outcome_distribution(id, pp::AlphaProbe{3, 0.3}), pp::DimensionError);
}

TEST(OutcomeDistribution, IdentityChannelGivesCoefficients) {
  for (int n = 1; n <= 4; ++n) {
    const pp::AlphaProbe probe{n, 0.35};
    const auto pr = pp::bell_outcome_distribution(pp::identity_channel(n), probe);
    for (std::uint64_t v = 0; v < pr.size(); ++v) {
      EXPECT_NEAR(pr[v], pp::coefficient_sq(probe, reference::weight(v, n)), 1e-12);
    }
  }
}

TEST(OutcomeDistribution, NormalizedAndNonnegative) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int n = 1; n <= 3; ++n) {
      const auto ch = pp::random_channel(n, seed);
      for (const pp::Probe probe : {pp::Probe{pp::AlphaProbe{n, 0.1 * static_cast<double>(seed % 10)}},
                                    pp::Probe{pp::WernerProbe{n, 0.05 * static_cast<double>(seed)}}}) {
        const auto pr = pp::bell_outcome_distribution(ch, probe);
        double sum = 0.0;
        for (double v : pr.values()) {
          EXPECT_GE(v, 0.0);
          sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
      }
    }
  }
}

TEST(Sampling, IdentityBellAllZero) {
  const auto rec = pp::sample_outcomes(pp::identity_channel(3), pp::AlphaProbe{3, 1.0}, 100, 5);
  ASSERT_EQ(rec.shots(), 100u);
  for (auto v : rec.outcomes) EXPECT_EQ(v, 0u);
}

TEST(Sampling, Deterministic) {
  const auto ch = pp::random_channel(2, 1);
  const auto a = pp::sample_outcomes(ch, pp::AlphaProbe{2, 0.4}, 500, 99);
  const auto b = pp::sample_outcomes(ch, pp::AlphaProbe{2, 0.4}, 500, 99);
  EXPECT_EQ(a.outcomes, b.outcomes);
  const auto c = pp::sample_outcomes(ch, pp::AlphaProbe{2, 0.4}, 500, 100);
  EXPECT_NE(a.outcomes, c.outcomes);
  EXPECT_THROW(pp::sample_outcomes(ch, pp::AlphaProbe{2, 0.4}, 0, 1), pp::RangeError);
}

TEST(Sampling, DepolarizingFrequencies) {
  const std::uint64_t shots = 100000;
  const auto rec = pp::sample_outcomes(pp::depolarizing_channel(2), pp::AlphaProbe{2, 0.5}, shots, 3);
  std::vector<double> counts(16, 0.0);
  for (auto v : rec.outcomes) counts[v] += 1.0;
  const double p = 1.0 / 16;
  const double sigma = std::sqrt(shots * p * (1 - p));
  for (double c : counts) EXPECT_LT(std::abs(c - shots * p), 5 * sigma);
}

TEST(Estimator, TrivialCases) {
  pp::OutcomeRecord rec{pp::AlphaProbe{2, 0.3}, "", 0, std::vector<std::uint64_t>(50, 0)};
  EXPECT_EQ(pp::estimate_eigenvalue(rec, PauliString(2)), 1.0);
  const auto bell = pp::sample_outcomes(pp::identity_channel(2), pp::AlphaProbe{2, 1.0}, 37, 2);
  for (std::uint64_t b = 0; b < 16; ++b) {
    EXPECT_EQ(pp::estimate_eigenvalue(bell, PauliString::from_index(2, b)), 1.0);
  }
}

TEST(Estimator, AllAtOnceMatchesSingle) {
  const auto rec = pp::sample_outcomes(pp::random_channel(3, 4), pp::AlphaProbe{3, 0.6}, 2000, 8);
  const auto all = pp::estimate_all(rec);
  for (std::uint64_t b = 0; b < 64; ++b) {
    EXPECT_NEAR(all[b], pp::estimate_eigenvalue(rec, PauliString::from_index(3, b)), 1e-12);
  }
}

TEST(Estimator, DegenerateWerner) {
  // E(b != 0) = lam - (1 - lam)/15 vanishes at lam = 1/16
  pp::OutcomeRecord rec{pp::WernerProbe{2, 1.0 / 16}, "", 0, {0, 1, 2}};
  EXPECT_THROW(pp::estimate_eigenvalue(rec, PauliString::parse("XX")), pp::DegenerateProbeError);
  EXPECT_THROW(pp::estimate_all(rec), pp::DegenerateProbeError);
  EXPECT_THROW(pp::plan_samples(pp::WernerProbe{2, 1.0 / 16}, 0.1, 0.05, 1), pp::DegenerateProbeError);
}

TEST(Estimator, UnbiasedOverSeeds) {
  const int trials = 1000;
  const std::uint64_t shots = 1000;
  for (int n = 1; n <= 3; ++n) {
    const auto ch = pp::random_channel(n, 40 + static_cast<std::uint64_t>(n));
    const pp::AlphaProbe probe{n, 0.5};
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<double> sum(count, 0.0), sum2(count, 0.0);
    for (int t = 0; t < trials; ++t) {
      const auto est = pp::estimate_all(pp::sample_outcomes(ch, probe, shots, 1000 + static_cast<std::uint64_t>(t)));
      for (std::uint64_t b = 0; b < count; ++b) {
        sum[b] += est[b];
        sum2[b] += est[b] * est[b];
      }
    }
    for (std::uint64_t b = 0; b < count; ++b) {
      const double mean = sum[b] / trials;
      const double var = sum2[b] / trials - mean * mean;
      const double se = std::sqrt(std::max(var, 1e-30) / trials);
      EXPECT_LE(std::abs(mean - ch.eigenvalues()[b]), 5 * se + 1e-12) << "n=" << n << " b=" << b;
    }
  }
}

TEST(Estimator, SpikeRecoveredWithPlannedShots) {
  const auto e = PauliString::parse("XIZ");
  const auto ch = pp::spike_channel(3, e, +1, 0.1);
  const pp::AlphaProbe probe{3, 0.5};
  const std::uint64_t shots = pp::plan_samples(probe, 0.1, 0.05, 3);
  int good = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto rec = pp::sample_outcomes(ch, probe, shots, t);
    good += std::abs(pp::estimate_eigenvalue(rec, e) - 0.2) <= 0.1;
  }
  EXPECT_GE(good, 190);
}

TEST(PlanSamples, Values) {
  EXPECT_EQ(pp::plan_samples(pp::AlphaProbe{3, 0.2}, 0.1, 0.05, 0), 738u);
  EXPECT_DOUBLE_EQ(pp::min_overlap(pp::AlphaProbe{4, 0.01}, 0), 1.0);
  EXPECT_DOUBLE_EQ(pp::min_overlap(pp::AlphaProbe{4, 0.5}, 2), 0.5 + 0.5 / 9);
  EXPECT_DOUBLE_EQ(pp::count_paulis_up_to_weight(3, 3), 64.0);
  const double m = pp::count_paulis_up_to_weight(4, 2);
  const double e_min = 0.25 + 0.75 / 9.0;
  const double expect = std::ceil(2.0 / 0.01 * std::log(2 * m / 0.05) / (e_min * e_min));
  EXPECT_EQ(pp::plan_samples(pp::AlphaProbe{4, 0.25}, 0.1, 0.05, 2), static_cast<std::uint64_t>(expect));
  EXPECT_THROW(pp::plan_samples(pp::AlphaProbe{3, 0.5}, 0.0, 0.05, 1), pp::RangeError);
  EXPECT_THROW(pp::plan_samples(pp::AlphaProbe{3, 0.5}, 0.1, 1.0, 1), pp::RangeError);
  EXPECT_THROW(pp::plan_samples(pp::AlphaProbe{3, 0.5}, 0.1, 0.05, 4), pp::RangeError);
}

TEST(PlanSamples, QuartersWhenAlphaHalves) {
  // small-alpha regime: 3^{-w} negligible against alpha
  const double r = static_cast<double>(pp::plan_samples(pp::AlphaProbe{10, 0.02}, 0.1, 0.05, 10)) /
                   static_cast<double>(pp::plan_samples(pp::AlphaProbe{10, 0.04}, 0.1, 0.05, 10));
  EXPECT_NEAR(r, 4.0, 0.05);
}

TEST(OutcomeRecord, JsonRoundTrip) {
  const auto rec = pp::sample_outcomes(pp::random_channel(2, 0), pp::AlphaProbe{2, 0.3}, 20, 11, "rnd0");
  const auto doc = pp::record_to_json(rec);
  EXPECT_EQ(doc.at("shots").get<int>(), 20);
  const auto back = pp::record_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(back.outcomes, rec.outcomes);
  EXPECT_EQ(back.seed, 11u);
  EXPECT_EQ(back.channel_id, "rnd0");
  EXPECT_DOUBLE_EQ(std::get<pp::AlphaProbe>(back.probe).alpha, 0.3);

  const auto werner = pp::record_to_json(pp::OutcomeRecord{pp::WernerProbe{1, 0.5}, "", 1, {3}});
  EXPECT_TRUE(werner.contains("lam_w"));
  EXPECT_TRUE(std::holds_alternative<pp::WernerProbe>(pp::record_from_json(werner).probe));
  auto bad = doc;
  bad["outcomes"] = {99};
  bad["shots"] = 1;
  EXPECT_THROW(pp::record_from_json(bad), pp::RangeError);
}

#include <cmath>

#include "doctest.h"
#include "lmg/analysis.hpp"
#include "lmg/errors.hpp"

using namespace lmg;

namespace {

const std::vector<ScalingMode> kBoth{ScalingMode::NonExtensive, ScalingMode::Extensive};

std::vector<std::pair<int, double>> sample(int from, int to, int step, double (*f)(int)) {
  std::vector<std::pair<int, double>> v;
  for (int n = from; n <= to; n += step) v.emplace_back(n, f(n));
  return v;
}

}  // namespace

TEST_CASE("sweep table structure") {
  const SweepTable t = sweep_cycle(EngineParams{}, 1, 12, kBoth);
  REQUIRE(t.rows.size() == 24);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const SweepRow& r = t.rows[i];
    CHECK(r.mode == (i < 12 ? ScalingMode::NonExtensive : ScalingMode::Extensive));
    CHECK(r.n == static_cast<int>(i % 12) + 1);
    CHECK(r.parity == r.n % 2);
    const double scale = std::abs(r.q_in) + std::abs(r.q_out);
    CHECK(std::abs(r.work - (r.q_in + r.q_out)) <= 1e-12 * scale);
    if (r.q_in != 0.0) {
      REQUIRE(r.eta_signed.has_value());
      CHECK(*r.eta_signed == 1.0 + r.q_out / r.q_in);
    }
  }
  // N = 1: both scalings coincide exactly
  CHECK(t.rows[0].work == t.rows[12].work);
  CHECK(t.rows[0].u_b == t.rows[12].u_b);
  CHECK(t.rows[0].u_d == t.rows[12].u_d);
  CHECK(t.series(ScalingMode::Extensive, &SweepRow::work, 0).size() == 6);
}

TEST_CASE("sweeps are deterministic") {
  const SweepTable a = sweep_cycle(EngineParams{}, 1, 30, kBoth);
  const SweepTable b = sweep_cycle(EngineParams{}, 1, 30, kBoth);
  CHECK(a.rows == b.rows);
}

TEST_CASE("sweep range checks") {
  CHECK_THROWS_AS(sweep_cycle(EngineParams{}, 0, 4, kBoth), InvalidSector);
  CHECK_THROWS_AS(sweep_cycle(EngineParams{}, 5, 4, kBoth), InvalidSector);
  CHECK_THROWS_AS(sweep_cycle(EngineParams{}, 1, 501, kBoth), InvalidSector);
  EngineParams bad;
  bad.t_low = -1.0;
  CHECK_THROWS_AS(sweep_cycle(bad, 1, 4, kBoth), InvalidTemperature);
}

TEST_CASE("returns analysis on a concave parabola") {
  const auto s = sample(2, 20, 2, [](int n) { return -double((n - 10) * (n - 10)); });
  const ReturnsAnalysis r = returns_analysis(s);
  CHECK(r.n_max == 10);
  CHECK(r.n_dim == 4);
  REQUIRE(r.marginal.size() == s.size() - 1);
  CHECK(r.marginal[0] == std::pair<int, double>{4, -36.0 + 64.0});
  CHECK(r.productivity[0].second == -64.0 / 2);
}

TEST_CASE("returns analysis needs six consecutive even points") {
  CHECK_THROWS_AS(returns_analysis(sample(2, 10, 2, [](int n) { return double(n); })), InsufficientData);
  CHECK_THROWS_AS(returns_analysis(sample(1, 11, 2, [](int n) { return double(n); })), InsufficientData);
  auto gap = sample(2, 14, 2, [](int n) { return double(n); });
  gap.erase(gap.begin() + 3);
  CHECK_THROWS_AS(returns_analysis(gap), InsufficientData);
  // convex everywhere: no onset
  const ReturnsAnalysis r = returns_analysis(sample(2, 20, 2, [](int n) { return double(n * n); }));
  CHECK_FALSE(r.n_dim.has_value());
  CHECK(r.n_max == 20);
}

TEST_CASE("a single negative second difference is not an onset") {
  // second differences: +, -, +, -, - ...
  const std::vector<std::pair<int, double>> s{{2, 0}, {4, 1}, {6, 3}, {8, 4}, {10, 6}, {12, 7}, {14, 7.5}, {16, 7.6}};
  const ReturnsAnalysis r = returns_analysis(s);
  CHECK(r.n_dim == 10);
}

TEST_CASE("efficiency extrema") {
  SweepTable t;
  SweepRow a, b, c;
  a.n = 2;
  a.work = 0.1;
  a.q_in = 1.0;
  a.eta_signed = 0.1;
  b.n = 4;
  b.work = 0.05;
  b.q_in = 0.1;
  b.eta_signed = 0.5;
  c.n = 6;
  c.work = -0.05;
  c.q_in = 0.1;
  c.eta_signed = -0.5;
  t.rows = {a, b, c};
  const EfficiencyExtremum e = efficiency_extrema(t, ScalingMode::NonExtensive);
  CHECK(e.n == 4);
  CHECK(e.eta == 0.5);
  t.rows = {c};
  CHECK_THROWS_AS(efficiency_extrema(t, ScalingMode::NonExtensive), NoEngineOperation);
  CHECK_THROWS_AS(efficiency_extrema(SweepTable{}, ScalingMode::Extensive), NoEngineOperation);
}

TEST_CASE("parity oscillation score") {
  const auto alternating = sample(1, 12, 1, [](int n) { return n % 2 ? -1.0 : 1.0; });
  CHECK(std::abs(parity_oscillation_score(alternating)) == 1.0);
  const auto smooth = sample(1, 12, 1, [](int n) { return 0.1 * n; });
  CHECK(std::abs(parity_oscillation_score(smooth)) <= 1.0);
  CHECK_THROWS_AS(parity_oscillation_score(sample(1, 5, 1, [](int n) { return double(n); })), InsufficientData);
  CHECK_THROWS_AS(parity_oscillation_score(sample(1, 13, 2, [](int n) { return double(n); })), InsufficientData);
}

TEST_CASE("quadratic fit") {
  std::vector<double> x, y;
  for (int i = 0; i < 10; ++i) {
    x.push_back(2.0 * i + 2.0);
    y.push_back(0.5 - 0.25 * x.back() + 3e-4 * x.back() * x.back());
  }
  const QuadraticFit f = quadratic_fit(x, y);
  CHECK(f.c0 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(f.c1 == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(f.c2 == doctest::Approx(3e-4).epsilon(1e-8));
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK_THROWS_AS(quadratic_fit(std::vector<double>{1, 2}, std::vector<double>{1, 2}), InsufficientData);
  CHECK_THROWS_AS(quadratic_fit(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}), DimensionError);
}

TEST_CASE("population change report") {
  const std::vector<int> ns{16, 17, 3};
  const auto rows = delta_population_report(EngineParams{}, ns);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].dominant_twice_labels == std::vector<int>{-2, 0, 2});
  CHECK(rows[1].dominant_twice_labels == std::vector<int>{-3, -1, 1, 3});
  CHECK(rows[0].dominant_fraction >= 0.99);
  CHECK(rows[1].dominant_fraction >= 0.99);
  CHECK(rows[2].dominant_fraction == 1.0);
  for (const auto& r : rows) {
    double sum = 0.0;
    for (double v : r.delta) sum += v;
    CHECK(std::abs(sum) < 1e-15);
  }
}

TEST_CASE("interference rows") {
  const InterferenceRow r = interference_row(EngineParams{}, 4);
  CHECK(r.n == 4);
  REQUIRE(r.sign_flip.has_value());
  CHECK(r.baseline == doctest::Approx(r.work - r.work_gamma_y_zero));
  CHECK(*r.sign_flip == doctest::Approx(0.5 * (*r.work_plus - *r.work_minus)));
  // the default run is the minus leg
  CHECK(*r.work_minus == r.work);
  CHECK(r.first_order_xy > 0.0);
  EngineParams flat;
  flat.hot.gamma_y = flat.cold.gamma_y = 0.01;
  CHECK_FALSE(interference_row(flat, 4).sign_flip.has_value());
}

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lmg/errors.hpp"
#include "lmg/phase_space.hpp"

using namespace lmg;

namespace {

constexpr double kPi = std::numbers::pi;

// d^S_{n m}(pi/2) from the explicit factorial sum.
long double wigner_d_half_pi(int ts, int tn, int tm) {
  const int jp = (ts + tm) / 2, jm = (ts - tm) / 2, np = (ts + tn) / 2, nm = (ts - tn) / 2;
  const int shift = (tn - tm) / 2;
  auto lf = [](int k) { return std::lgamma(static_cast<long double>(k) + 1.0L); };
  long double sum = 0.0L;
  for (int k = std::max(0, -shift); k <= std::min(jp, nm); ++k) {
    const long double mag = std::exp(0.5L * (lf(jp) + lf(jm) + lf(np) + lf(nm)) - lf(jp - k) - lf(k) -
                                     lf(nm - k) - lf(k + shift));
    sum += ((k + shift) % 2 ? -mag : mag);
  }
  return sum * std::pow(2.0L, -0.5L * ts);
}

// |<n_x|m_y>|^2 from complex Hermitian diagonalization of S_x and S_y.
Eigen::MatrixXd overlap_oracle(int ts) {
  const int d = ts + 1;
  const double s = 0.5 * ts;
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k + 1 < d; ++k) {
    const double m = -s + k;
    sp(k + 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd sx = 0.5 * (sp + sp.adjoint());
  const Eigen::MatrixXcd sy = std::complex<double>(0, -0.5) * (sp - sp.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ex(sx), ey(sy);
  return (ex.eigenvectors().adjoint() * ey.eigenvectors()).cwiseAbs2();
}

struct Arc {
  double lo, hi;
};

void push_arc(std::vector<Arc>& out, double lo, double hi) {
  if (hi <= lo) return;
  if (lo < 0.0) {
    push_arc(out, lo + 2 * kPi, std::min(hi, 0.0) + 2 * kPi);
    push_arc(out, 0.0, hi);
    return;
  }
  out.push_back({lo, hi});
}

double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

// Angular measure of {phi : x = rho cos(phi) in [x1, x2), y = rho sin(phi) in [y1, y2)}.
double angular_measure(double rho, double x1, double x2, double y1, double y2) {
  if (rho <= 0.0) return 0.0;
  std::vector<Arc> cx, cy;
  const double c1 = clamp1(x1 / rho), c2 = clamp1(x2 / rho);
  if (c2 > c1) {
    push_arc(cx, std::acos(c2), std::acos(c1));
    push_arc(cx, 2 * kPi - std::acos(c1), 2 * kPi - std::acos(c2));
  }
  const double s1 = clamp1(y1 / rho), s2 = clamp1(y2 / rho);
  if (s2 > s1) {
    push_arc(cy, std::asin(s1), std::asin(s2));
    push_arc(cy, kPi - std::asin(s2), kPi - std::asin(s1));
  }
  double total = 0.0;
  for (const Arc& a : cx)
    for (const Arc& b : cy) total += std::max(0.0, std::min(a.hi, b.hi) - std::max(a.lo, b.lo));
  return total;
}

// Sphere area over z in [z_lo, R] with dA = R dz dphi.
double area_oracle(double radius, double z_lo, double x1, double x2, double y1, double y2) {
  const int steps = 200000;
  const double h = (radius - z_lo) / steps;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double z = z_lo + (i + 0.5) * h;
    acc += angular_measure(std::sqrt(std::max(0.0, radius * radius - z * z)), x1, x2, y1, y2);
  }
  return radius * acc * h;
}

}  // namespace

TEST_CASE("exact transition tables for the smallest spins") {
  const TransitionTable half = transition_table_exact(make_sector(1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(half.values(i, j) == doctest::Approx(0.5).epsilon(1e-15));
  const TransitionTable one = transition_table_exact(make_sector(2));
  const double expected[3][3] = {{0.25, 0.5, 0.25}, {0.5, 0.0, 0.5}, {0.25, 0.5, 0.25}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(one.values(i, j) - expected[i][j]) < 1e-15);
  CHECK(one.kind == TransitionKind::Exact);
}

TEST_CASE("exact table matches squared Wigner d at a quarter turn") {
  for (int ts = 1; ts <= 40; ++ts) {
    CAPTURE(ts);
    const SpinSector s = make_sector(ts);
    const TransitionTable t = transition_table_exact(s);
    double worst = 0.0;
    for (int tn : s.twice_labels())
      for (int tm : s.twice_labels()) {
        const long double d = wigner_d_half_pi(ts, tn, tm);
        worst = std::max(worst, std::abs(t.at(tn, tm) - static_cast<double>(d * d)));
      }
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("exact table matches complex Hermitian eigenvectors") {
  for (int ts : {1, 2, 3, 6, 11, 24, 31}) {
    CAPTURE(ts);
    const TransitionTable t = transition_table_exact(make_sector(ts));
    const Eigen::MatrixXd o = overlap_oracle(ts);
    double worst = 0.0;
    for (int i = 0; i <= ts; ++i)
      for (int j = 0; j <= ts; ++j) worst = std::max(worst, std::abs(t.values(i, j) - o(i, j)));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("edge column is binomial") {
  for (int ts : {2, 9, 42, 101, 200}) {
    const SpinSector s = make_sector(ts);
    const TransitionTable t = transition_table_exact(s);
    for (int tn : s.twice_labels()) {
      const int k = (ts + tn) / 2;
      const double binom = std::exp(std::lgamma(ts + 1.0) - std::lgamma(k + 1.0) - std::lgamma(ts - k + 1.0) -
                                    ts * std::log(2.0));
      CHECK(std::abs(t.at(tn, ts) - binom) < 1e-12);
    }
  }
}

TEST_CASE("exact tables are doubly stochastic and symmetric up to 2S = 200") {
  for (int ts = 1; ts <= 200; ts += (ts < 40 ? 1 : 7)) {
    CAPTURE(ts);
    const SpinSector s = make_sector(ts);
    const TransitionTable t = transition_table_exact(s);
    const std::size_t d = s.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        row += t.values(i, j);
        col += t.values(j, i);
        worst = std::max(worst, std::abs(t.values(i, j) - t.values(j, i)));
        worst = std::max(worst, std::abs(t.values(i, j) - t.values(d - 1 - i, d - 1 - j)));
        CHECK(t.values(i, j) >= 0.0);
      }
      worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("classically allowed band intersections") {
  const SpinSector s = make_sector(4);  // S = 2, S(S+1) = 6
  CHECK(classically_allowed(s, 0, 4));
  CHECK(classically_allowed(s, 2, 4));
  CHECK_FALSE(classically_allowed(s, 4, 4));
  CHECK(classically_allowed(s, 2, 2));
  CHECK_THROWS_AS(band_geometry(s, 4, 4, {64, 128}), ClassicallyForbidden);
  CHECK_THROWS_AS(band_geometry(s, 1, 4, {64, 128}), InvalidLabel);
}

TEST_CASE("quadrature resolution validation") {
  CHECK_THROWS_AS((QuadratureResolution{3, 16}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuadratureResolution{4, 2}.validate()), std::invalid_argument);
  CHECK_NOTHROW(QuadratureResolution{}.validate());
}

TEST_CASE("band areas agree with an independent one-dimensional integral") {
  for (int ts : {3, 8, 17}) {
    CAPTURE(ts);
    const SpinSector s = make_sector(ts);
    const BandAreaTable a = compute_band_areas(s);
    const double r = a.radius, sp = s.spin();
    const double tol = 2e-3 * r * r;
    for (int tn : s.twice_labels()) {
      for (int tm : s.twice_labels()) {
        if ((tn + tm) % 4 != 0 && ts != 3) continue;  // thin the grid of checks
        const double n = 0.5 * tn, m = 0.5 * tm;
        const std::size_t i = s.index_of(tn), j = s.index_of(tm);
        const double lobe = area_oracle(r, 0.0, n - 0.5, n + 0.5, m - 0.5, m + 0.5);
        const double lens = area_oracle(r, -r, n, 2 * r, m, 2 * r);
        CHECK(std::abs(a.lobe(i, j) - lobe) < tol);
        CHECK(std::abs(a.lens(i, j) - lens) < tol);
      }
    }
    // analytic anchors
    const std::size_t zero = s.integer_spin() ? s.index_of(0) : 0;
    if (s.integer_spin()) CHECK(a.lens(zero, zero) == doctest::Approx(kPi * r * r).epsilon(2e-3));
    CHECK(a.lens(s.index_of(s.integer_spin() ? 0 : 1), s.dim() - 1) ==
          doctest::Approx(area_oracle(r, -r, s.integer_spin() ? 0.0 : 0.5, 2 * r, sp, 2 * r)).epsilon(2e-3));
  }
}

TEST_CASE("lobes partition the upper hemisphere") {
  for (int ts : {4, 9, 20}) {
    const BandAreaTable a = compute_band_areas(make_sector(ts));
    double sum = 0.0;
    for (double v : a.lobe.data()) sum += v;
    CHECK(2.0 * sum == doctest::Approx(4.0 * kPi * a.radius * a.radius).epsilon(1e-12));
  }
}

TEST_CASE("interference angles") {
  for (int ts : {42, 60}) {
    const SpinSector s = make_sector(ts);
    const BandAreaTable a = compute_band_areas(s);
    const BandGeometry g = band_geometry(a, 0, ts);
    CHECK(g.classically_allowed);
    CHECK(std::abs(g.phi) <= 0.05);
    CHECK(g.phi == doctest::Approx(g.lens_area / (2 * g.radius) - kPi / 4));
  }
  // With m = S the overlap area shrinks with n, so Phi falls toward -pi/4.
  for (int ts = 10; ts <= 40; ts += 2) {
    const SpinSector s = make_sector(ts);
    const BandAreaTable a = compute_band_areas(s);
    double previous = INFINITY;
    for (int tn = 0; classically_allowed(s, tn, ts); tn += 2) {
      const double phi = band_geometry(a, tn, ts).phi;
      CHECK(phi < previous);
      CHECK(phi >= -kPi / 4);
      previous = phi;
    }
  }
}

TEST_CASE("semiclassical table") {
  const SpinSector s = make_sector(12);
  const BandAreaTable a = compute_band_areas(s);
  const TransitionTable t = transition_table_semiclassical(a);
  CHECK(t.kind == TransitionKind::Semiclassical);
  for (int tn : s.twice_labels())
    for (int tm : s.twice_labels()) {
      CHECK(t.is_allowed(tn, tm) == classically_allowed(s, tn, tm));
      if (!t.is_allowed(tn, tm)) CHECK(t.at(tn, tm) == 0.0);
      else CHECK(t.at(tn, tm) == semiclassical_probability(band_geometry(a, tn, tm)));
    }
  BandGeometry off;
  CHECK(semiclassical_probability(off) == 0.0);
}

TEST_CASE("comparison report") {
  const SpinSector s = make_sector(10);
  const std::vector<int> ns{0, 2};
  const GeometryReport r = semiclassical_vs_exact_report(s, ns, {512, 1024});
  CHECK(r.twice_s == 10);
  CHECK(r.rows.size() == 2 * s.dim());
  REQUIRE(r.differences.size() == 2);
  const TransitionTable e = transition_table_exact(s);
  CHECK(r.differences[0].exact == doctest::Approx(e.at(0, 10) - e.at(2, 10)));
  // binomial edge values decrease away from n = 0
  CHECK(r.differences[0].exact > 0.0);
}

TEST_CASE("squeezed vacuum photon statistics") {
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    CAPTURE(r);
    const FockDistribution f = squeezed_vacuum_fock(r, 101);
    double even = 0.0;
    for (int k = 0; k <= 101; ++k) {
      if (k % 2) CHECK(f.probs[k] == 0.0);
      else if (k <= 100) even += f.probs[k];
    }
    CHECK(f.probs[0] == doctest::Approx(1.0 / std::cosh(r)).epsilon(1e-15));
    if (r < 2.0) CHECK(std::abs(even - 1.0) <= 1e-12);
    // P(2) = tanh^2 r / (2 cosh r)
    CHECK(f.probs[2] == doctest::Approx(std::tanh(r) * std::tanh(r) / (2.0 * std::cosh(r))).epsilon(1e-14));
  }
  CHECK(squeezed_vacuum_fock(0.0, 4).probs == std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(squeezed_vacuum_fock(-0.1, 4), InvalidSqueezing);
  CHECK_THROWS_AS(squeezed_vacuum_fock(0.1, -1), DimensionError);
}

#include <cmath>
#include <vector>

#include "doctest.h"
#include "liyorke/exact.hpp"
#include "liyorke/metric.hpp"
#include "liyorke/orbit.hpp"
#include "liyorke/system.hpp"

using namespace liyorke;

TEST_CASE("single-step iteration on the catalog maps") {
  CHECK(iterate(System::doubling(), {0.1, 0}, 1).coord == doctest::Approx(0.2).epsilon(1e-15));
  Point r = iterate(System::rotation(), {0.0, 0}, 1);
  CHECK(r.coord == kGoldenAlpha);

  System prod = System::product(System::doubling(), 2);
  Point p = iterate(prod, {0.3, 0}, 1);
  CHECK(p.coord == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p.label == 1);
  CHECK(iterate(prod, {0.3, 1}, 1).label == 0);
}

TEST_CASE("iterate composes exactly") {
  RngStream rng(9, 0);
  for (const auto& sys :
       {System::rotation(), System::doubling(), System::periodic_hybrid(0.5),
        System::product(System::doubling(), 3)}) {
    for (int t = 0; t < 50; ++t) {
      Point p = sample_point(sys, rng);
      CHECK(iterate(sys, p, 0) == p);
      Point two_hops = iterate(sys, iterate(sys, p, 7), 11);
      CHECK(two_hops == iterate(sys, p, 18));
    }
  }
}

TEST_CASE("invalid points are rejected") {
  System prod = System::product(System::doubling(), 2);
  CHECK_THROWS_AS(iterate(prod, {0.5, 2}, 1), std::domain_error);
  CHECK_THROWS_AS(iterate(prod, {1.5, 0}, 1), std::domain_error);
  CHECK_THROWS_AS(iterate(prod, {-0.1, 0}, 1), std::domain_error);
}

TEST_CASE("periodic hybrid fixes its identity region exactly") {
  System sys = System::periodic_hybrid(0.5);
  RngStream rng(3, 1);
  for (int t = 0; t < 200; ++t) {
    double x = rng.next_double() * 0.5;
    CHECK(iterate(sys, {x, 0}, 17).coord == x);
  }
  // and the expanding part stays inside [f, 1)
  for (int t = 0; t < 200; ++t) {
    double x = 0.5 + rng.next_double() * 0.5;
    double y = iterate(sys, {x, 0}, 5).coord;
    CHECK(y >= 0.5);
    CHECK(y < 1.0);
  }
}

TEST_CASE("rotation orbit distances are constant") {
  auto d = orbit_distances(System::rotation(), Metric::circle_arc(), {0.2, 0},
                           {0.5, 0}, 5);
  REQUIRE(d.size() == 5);
  for (double v : d) CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("doubling swaps 1/3 and 2/3; distance pinned by the rational oracle") {
  Rational a{1, 3}, b{2, 3};
  for (int n = 0; n < 200; ++n) {
    CHECK(circle_distance_exact(a, b).value() == doctest::Approx(1.0 / 3.0));
    a = doubling_step_exact(a);
    b = doubling_step_exact(b);
  }
  // the floating orbit tracks the oracle while the mantissa lasts; the
  // deviation grows like 2^(n-53) once random tape bits enter the window
  auto d = orbit_distances(System::doubling(), Metric::circle_arc(),
                           {1.0 / 3.0, 0}, {2.0 / 3.0, 0}, 40);
  for (std::size_t n = 0; n < d.size(); ++n)
    CHECK(std::fabs(d[n] - 1.0 / 3.0) <= std::ldexp(1.0, int(n) - 48));
}

TEST_CASE("identical points never separate") {
  auto d = orbit_distances(System::doubling(), Metric::circle_arc(), {0.77, 0},
                           {0.77, 0}, 100);
  for (double v : d) CHECK(v == 0.0);
}

TEST_CASE("sampled coordinates are uniform (KS) and labels balanced") {
  System prod = System::product(System::doubling(), 2);
  RngStream rng(11, 2);
  const int n = 100000;
  std::vector<double> xs;
  xs.reserve(n);
  int ones = 0;
  for (int i = 0; i < n; ++i) {
    Point p = sample_point(prod, rng);
    xs.push_back(p.coord);
    ones += p.label;
  }
  std::sort(xs.begin(), xs.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i)
    ks = std::max(ks, std::fabs(xs[i] - double(i + 1) / n));
  CHECK(ks < 0.01);
  // binomial(n, 1/2): 4 sigma = 2 sqrt(n)
  CHECK(std::fabs(ones - n / 2.0) < 2.0 * std::sqrt(double(n)));
}

TEST_CASE("every catalog system preserves the measure of a dyadic interval") {
  const double lo = 0.25, hi = 0.5;
  const int n = 100000;
  for (const auto& sys :
       {System::rotation(), System::doubling(), System::periodic_hybrid(0.5),
        System::product(System::doubling(), 2)}) {
    RngStream rng(17, 4);
    int in_I = 0, in_preimage = 0;
    for (int i = 0; i < n; ++i) {
      Point p = sample_point(sys, rng);
      if (p.coord >= lo && p.coord < hi) ++in_I;
      double t = iterate(sys, p, 1).coord;
      if (t >= lo && t < hi) ++in_preimage;
    }
    double p1 = double(in_I) / n, p2 = double(in_preimage) / n;
    double se = std::sqrt(2.0 * 0.25 * 0.75 / n);
    CHECK(std::fabs(p1 - p2) < 3.0 * se);
  }
}

TEST_CASE("orbit walkers are reproducible and match iterate early on") {
  System sys = System::doubling();
  Point start{0.123456789, 0};
  OrbitWalker a(sys, start), b(sys, start);
  Point direct = start;
  for (int n = 0; n < 45; ++n) {
    CHECK(a.current().coord == b.current().coord);
    // the tape reproduces plain arithmetic up to the random bits that have
    // entered the 53-bit window, i.e. up to 2^(n-53)-ish
    CHECK(std::fabs(a.current().coord - direct.coord) <=
          std::ldexp(1.0, n - 48));
    a.step();
    b.step();
    direct = iterate(sys, direct, 1);
  }
  // long orbits stay spread out instead of collapsing to 0
  OrbitWalker w(sys, start);
  w.advance(100000);
  int nonzero = 0;
  for (int n = 0; n < 100; ++n) {
    if (w.current().coord > 1e-3 && w.current().coord < 1.0 - 1e-3) ++nonzero;
    w.step();
  }
  CHECK(nonzero > 80);
}

TEST_CASE("ground-truth tags follow the catalog table") {
  CHECK(System::doubling().has_tag(GroundTruth::WeaklyMixing));
  CHECK(System::doubling().has_tag(GroundTruth::ProductErgodic));
  CHECK(System::rotation().has_tag(GroundTruth::IsometryAdmitting));
  CHECK_FALSE(System::rotation().has_tag(GroundTruth::WeaklyMixing));
  CHECK(System::periodic_hybrid(0.5).has_tag(GroundTruth::HasPeriodicPart));
  CHECK_FALSE(System::periodic_hybrid(0.5).has_tag(GroundTruth::Aperiodic));
  System prod = System::product(System::doubling(), 2);
  CHECK(prod.has_tag(GroundTruth::Ergodic));
  CHECK_FALSE(prod.has_tag(GroundTruth::WeaklyMixing));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circfrechet/circle.hpp"
#include "circfrechet/errors.hpp"

using namespace circfr;

TEST_CASE("canonical angle range and idempotence") {
  for (double t : {-10.0, -kPi, -1.0, 0.0, 1.0, kPi, 10.0, 100.0}) {
    const double c = canonical_angle(t);
    CHECK(c >= -kPi);
    CHECK(c < kPi);
    CHECK(canonical_angle(c) == c);
    CHECK(canonical_angle(t + kTwoPi) == doctest::Approx(c).epsilon(1e-12));
  }
  CHECK(canonical_angle(kPi) == doctest::Approx(-kPi));
}

TEST_CASE("rotate quarter turns and identity") {
  const UnitVector2 e1{1.0, 0.0};
  const UnitVector2 e2{0.0, 1.0};
  auto q = rotate(e1, kPi / 2.0);
  CHECK(q.x1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q.x2 == doctest::Approx(1.0).epsilon(1e-15));
  auto r = rotate(e2, kPi / 2.0);
  CHECK(r.x1 == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r.x2 == doctest::Approx(0.0).epsilon(1e-15));
  for (double t : {-2.0, 0.3, 1.9}) {
    const auto x = UnitVector2::from_angle(t);
    const auto same = rotate(x, 0.0);
    CHECK(same.x1 == doctest::Approx(x.x1).epsilon(1e-15));
    CHECK(same.x2 == doctest::Approx(x.x2).epsilon(1e-15));
  }
  CHECK_THROWS_AS(rotate(UnitVector2{2.0, 0.0}, 1.0), DomainError);
}

TEST_CASE("angle_between inverts rotate") {
  const UnitVector2 e1{1.0, 0.0};
  CHECK(angle_between(e1, e1) == 0.0);
  CHECK(angle_between(e1, UnitVector2{0.0, 1.0}) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  // antipode maps to the canonical boundary representative -pi
  CHECK(angle_between(e1, UnitVector2{-1.0, 0.0}) == doctest::Approx(-kPi));
  for (double base : {-2.5, 0.0, 1.1}) {
    const auto x = UnitVector2::from_angle(base);
    for (double t = -3.1; t < 3.11; t += 0.31) {
      CHECK(angle_between(x, rotate(x, t)) == doctest::Approx(t).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(angle_between(e1, UnitVector2{0.5, 0.5}), DomainError);
}

TEST_CASE("rotation equivariance of angle_between") {
  for (double q : {0.4, -1.3, 2.8}) {
    for (double a : {-2.0, 0.1, 1.7}) {
      for (double b : {-0.9, 0.6, 3.0}) {
        const auto x = UnitVector2::from_angle(a);
        const auto z = UnitVector2::from_angle(b);
        const auto qx = UnitVector2::from_angle(canonical_angle(a + q));
        const auto qz = UnitVector2::from_angle(canonical_angle(b + q));
        CHECK(angle_between(qx, qz) == doctest::Approx(angle_between(x, z)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("isometry: chord length is 2|sin(theta/2)|") {
  const auto x = UnitVector2::from_angle(0.7);
  for (double t = -3.1; t < 3.11; t += 0.155) {
    const auto z = rotate(x, t);
    const double chord = std::hypot(z.x1 - x.x1, z.x2 - x.x2);
    CHECK(chord == doctest::Approx(2.0 * std::abs(std::sin(t / 2.0))).epsilon(1e-12));
    CHECK(chord <= std::abs(t) + 1e-12);
  }
}

TEST_CASE("chord argument") {
  const auto x = UnitVector2::from_angle(0.3);
  CHECK(chord_arg(x, x, 0.7) == 0.0);
  CHECK(chord_arg(UnitVector2{1.0, 0.0}, UnitVector2{-1.0, 0.0}, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(chord_arg(UnitVector2{1.0, 0.0}, UnitVector2{0.0, 1.0}, 0.5) ==
        doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(chord_arg(x, x, 0.0), DomainError);
  // consistency with the angle overload and the (1 - cos) identity
  for (double t = -3.0; t < 3.01; t += 0.5) {
    const auto z = rotate(x, t);
    const double h = 0.37;
    CHECK(chord_arg(x, z, h) * h * h ==
          doctest::Approx(1.0 - std::cos(angle_between(x, z))).epsilon(1e-12));
    CHECK(chord_arg_angles(0.3, canonical_angle(0.3 + t), h) ==
          doctest::Approx(chord_arg(x, z, h)).epsilon(1e-12));
  }
}

TEST_CASE("von Mises sampler: uniform case has small resultant") {
  const auto s = sample_von_mises(0.0, 0.0, 100000, 77);
  double c = 0.0, sn = 0.0;
  for (double a : s.angles) {
    c += std::cos(a);
    sn += std::sin(a);
    CHECK(a >= -kPi);
    CHECK(a < kPi);
  }
  const double rbar = std::hypot(c, sn) / 100000.0;
  CHECK(rbar < 0.02);
}

TEST_CASE("von Mises sampler: concentrated case centers at mu") {
  const double mu = 1.1;
  const auto s = sample_von_mises(mu, 4.0, 100000, 12345);
  double c = 0.0, sn = 0.0;
  for (double a : s.angles) {
    c += std::cos(a);
    sn += std::sin(a);
  }
  CHECK(std::atan2(sn, c) == doctest::Approx(mu).epsilon(0.02));
}

TEST_CASE("von Mises sampler determinism") {
  const auto a = sample_von_mises(0.5, 2.0, 1000, 9);
  const auto b = sample_von_mises(0.5, 2.0, 1000, 9);
  REQUIRE(a.angles.size() == b.angles.size());
  for (std::size_t i = 0; i < a.angles.size(); ++i) CHECK(a.angles[i] == b.angles[i]);
  const auto c = sample_von_mises(0.5, 2.0, 1000, 10);
  CHECK(a.angles != c.angles);
}

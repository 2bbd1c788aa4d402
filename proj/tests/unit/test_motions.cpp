#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/fixtures.hpp"
#include "homspace/errors.hpp"
#include "homspace/motions.hpp"
#include "homspace/trigrel.hpp"

using namespace homspace;

namespace {

double gap(const Matrix& lhs, const Matrix& rhs) { return (lhs - rhs).lpNorm<Eigen::Infinity>(); }

}  // namespace

TEST_CASE("main rotations") {
  for (const Signature& sig : testing::signatures_up_to(3)) {
    for (int m = 1; m <= sig.dimension(); ++m) CHECK(main_rotation(m, 0.0, sig).matrix().isIdentity(0.0));
  }
  Matrix quarter(3, 3);
  quarter << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(gap(main_rotation(1, std::numbers::pi / 2, Signature::from_ints({1, 1})).matrix(), quarter) < 1e-15);
  const Matrix boost = main_rotation(2, 0.4, Signature::from_ints({0, -1})).matrix();
  CHECK(boost(1, 1) == doctest::Approx(std::cosh(0.4)));
  CHECK(boost(1, 2) == doctest::Approx(std::sinh(0.4)));
  CHECK(boost(2, 1) == doctest::Approx(std::sinh(0.4)));
  CHECK(boost(2, 2) == doctest::Approx(std::cosh(0.4)));
  CHECK_THROWS_AS(main_rotation(3, 0.1, Signature::from_ints({1, 1})), GeometryError);
  testing::Sampler sampler(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig = testing::signatures_up_to(3)[sampler.integer(0, 38)];
    const int m = sampler.integer(1, sig.dimension());
    CHECK(is_gm_orthogonal(main_rotation(m, sampler.angle(sig.element(m)), sig).matrix(), sig).ok);
  }
}

TEST_CASE("plane rotations") {
  const Signature sig = Signature::from_ints({-1, 1, 0});
  for (int i = 0; i < 3; ++i) {
    CHECK(gap(rotation(i, i + 1, 0.3, sig).matrix(), main_rotation(i + 1, 0.3, sig).matrix()) == 0.0);
  }
  for (const Signature& plane : testing::nine_planes()) {
    const Matrix translation = rotation(0, 2, 0.6, plane).matrix();
    const TypeValue type = plane.cumulative(2);
    CHECK(translation(0, 0) == doctest::Approx(gcos(0.6, type)));
    CHECK(translation(2, 0) == doctest::Approx(gsin(0.6, type)));
    CHECK(translation(0, 2) == doctest::Approx(-type.factor() * gsin(0.6, type)));
    CHECK(translation(1, 1) == 1.0);
  }
}

TEST_CASE("translation equals the right-triangle rotation chain") {
  for (const Signature& plane : testing::nine_planes()) {
    RightTriangle known;
    known.a = Part::known(0.3);
    known.b = Part::known(0.4);
    const RightTriangle t = solve_right_triangle(known, plane);
    const Motion chain = compose(compose(main_rotation(2, t.beta_prime.value(), plane), main_rotation(1, t.c.value(), plane)),
                                 compose(main_rotation(2, -t.alpha.value(), plane), main_rotation(1, -t.b.value(), plane)));
    CHECK(gap(chain.matrix(), rotation(0, 2, t.a.value(), plane).matrix()) < 1e-12);
  }
}

TEST_CASE("GM-orthogonality validation") {
  for (const Signature& sig : testing::signatures_up_to(3)) {
    CHECK(is_gm_orthogonal(Matrix::Identity(sig.dimension() + 1, sig.dimension() + 1), sig).ok);
  }
  const double angle = 0.5;
  Matrix classical = Matrix::Identity(3, 3);
  classical.topLeftCorner(2, 2) << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  const GMCheck check = is_gm_orthogonal(classical, Signature::from_ints({0, 1}));
  CHECK_FALSE(check.ok);
  CHECK(check.zero_block_residual > 0.1);
  CHECK_THROWS_AS(Motion(classical, Signature::from_ints({0, 1})), GeometryError);
}

TEST_CASE("composition and inverse") {
  const Signature sphere = Signature::from_ints({1, 1});
  CHECK(gap(compose(main_rotation(1, 0.3, sphere), main_rotation(1, 0.5, sphere)).matrix(),
            main_rotation(1, 0.8, sphere).matrix()) < 1e-15);
  CHECK(gap(inverse(main_rotation(1, 0.7, sphere)).matrix(), main_rotation(1, -0.7, sphere).matrix()) < 1e-15);
  CHECK(inverse(Motion::identity(sphere)).matrix().isIdentity(0.0));
  CHECK_THROWS_AS(compose(Motion::identity(sphere), Motion::identity(Signature::from_ints({1, 0}))), GeometryError);

  testing::Sampler sampler(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Signature sig = testing::signatures_up_to(4)[sampler.integer(0, 119)];
    const Motion lhs = sampler.motion(sig);
    const Motion rhs = sampler.motion(sig);
    CHECK(is_gm_orthogonal(compose(lhs, rhs).matrix(), sig, 1e-8).ok);
    CHECK(gap(compose(lhs, Motion::identity(sig)).matrix(), lhs.matrix()) == 0.0);
  }
  const Signature mixed = Signature::from_ints({1, 0, -1});
  for (int trial = 0; trial < 50; ++trial) {
    const Motion m = sampler.motion(mixed);
    const Matrix oracle = m.matrix().partialPivLu().inverse();
    CHECK(gap(gm_inverse(m.matrix(), mixed), oracle) < 1e-9);
  }
}

TEST_CASE("decomposition") {
  const Signature sphere = Signature::from_ints({1, 1});
  const Decomposition identity = decompose(Motion::identity(sphere));
  CHECK(identity.rotations.empty());
  CHECK(identity.reflection == std::vector<int>{1, 1, 1});
  const Motion single = main_rotation(2, 0.7, sphere);
  CHECK(gap(decompose(single).recompose(sphere), single.matrix()) < 1e-10);

  testing::Sampler sampler(33);
  const Signature space = Signature::from_ints({-1, 1, 1});
  for (int trial = 0; trial < 50; ++trial) {
    const Motion m = sampler.motion(space, 6);
    const Decomposition d = decompose(m);
    CHECK(gap(d.recompose(space), m.matrix()) < 1e-9);
    CHECK(d.rotations.size() <= 6);
  }
  for (int n = 2; n <= 4; ++n) {
    for (const Signature& sig : testing::signatures_of_dimension(n)) {
      const Motion m = sampler.motion(sig, 8);
      const Decomposition d = decompose(m);
      CHECK(gap(d.recompose(sig), m.matrix()) < 1e-9);
      CHECK(static_cast<int>(d.rotations.size()) <= n * (n + 1) / 2);
      for (const PlaneRotation& r : d.rotations) CHECK(r.type == sig.pair(r.i, r.j).finite());
    }
  }
}

TEST_CASE("parameterization") {
  testing::Sampler sampler(34);
  for (const Signature& sig : testing::nine_planes()) {
    const Motion m = sampler.motion(sig);
    CHECK(parameterize(m, 0.0).matrix().isIdentity(1e-12));
    CHECK(gap(parameterize(m, 1.0).matrix(), m.matrix()) < 1e-9);
    CHECK(is_gm_orthogonal(parameterize(m, 0.37).matrix(), sig).ok);
  }
  const Signature sphere = Signature::from_ints({1, 1});
  CHECK(gap(parameterize(main_rotation(1, 0.8, sphere), 0.5).matrix(), main_rotation(1, 0.4, sphere).matrix()) < 1e-12);
  const Signature flat = Signature::from_ints({0, 1});
  Matrix mirror = Matrix::Identity(3, 3);
  mirror(2, 2) = -1;
  CHECK_THROWS_AS(parameterize(Motion(mirror, flat), 0.5), GeometryError);
}

TEST_CASE("proper motions") {
  const Signature flat = Signature::from_ints({0, 1});
  CHECK(is_proper(Motion::identity(flat)));
  Matrix mirror = Matrix::Identity(3, 3);
  mirror(2, 2) = -1;
  CHECK_FALSE(is_proper(Motion(mirror, flat)));
  testing::Sampler sampler(35);
  for (const Signature& sig : testing::signatures_up_to(3)) {
    Motion m = Motion::identity(sig);
    for (int f = 0; f < 4; ++f) {
      const int axis = sampler.integer(1, sig.dimension());
      m = compose(m, main_rotation(axis, sampler.angle(sig.element(axis)), sig));
    }
    CHECK(is_proper(m));
  }
}

TEST_CASE("axis relations") {
  CHECK(axis_relation(1, 2, Signature::from_ints({0, -1})) == AxisRelation::Interchangeable);
  CHECK(axis_relation(1, 2, Signature::from_ints({0, 1})) == AxisRelation::Equivalent);
  CHECK(axis_relation(0, 1, Signature::from_ints({0, 1})) == AxisRelation::NonInterchangeable);
  CHECK(to_string(AxisRelation::Interchangeable) == "interchangeable");
}

TEST_CASE("group structure of random motions") {
  testing::Sampler sampler(36);
  for (const Signature& sig : testing::signatures_up_to(4)) {
    const Motion m = sampler.motion(sig);
    const GMCheck check = is_gm_orthogonal(m.matrix(), sig);
    CHECK(check.ok);
    CHECK(check.row_residual < 1e-9);
    CHECK(std::abs(std::abs(m.matrix().determinant()) - 1.0) < 1e-9);
    CHECK(gap(compose(m, inverse(m)).matrix(), Matrix::Identity(m.size(), m.size())) < 1e-9);
    for (int level = 1; level <= sig.dimension(); ++level) {
      if (!sig.element(level).is_zero()) continue;
      CHECK(m.matrix().topRightCorner(level, sig.dimension() + 1 - level).lpNorm<Eigen::Infinity>() <= default_tolerance());
    }
    for (int i = 0; i <= sig.dimension(); ++i) {
      for (int j = i + 1; j <= sig.dimension(); ++j) {
        CHECK(sig.cumulative(j) == sig.cumulative(i) * sig.pair(i, j).finite());
      }
    }
  }
}

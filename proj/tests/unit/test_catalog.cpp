#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "../support/fixtures.hpp"
#include "homspace/catalog.hpp"
#include "homspace/errors.hpp"

using namespace homspace;

namespace {

double gap(const Matrix& lhs, const Matrix& rhs) { return (lhs - rhs).lpNorm<Eigen::Infinity>(); }

Matrix power(const Matrix& m, int exponent) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < exponent; ++i) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("named spaces") {
  CHECK(resolve_space("minkowski") == Signature::from_ints({0, -1, 1, 1}));
  CHECK(resolve_space("desitter") == Signature::from_ints({-1, -1, 1, 1}));
  CHECK(resolve_space("antidesitter") == Signature::from_ints({1, -1, 1, 1}));
  CHECK(resolve_space("galilean-spacetime") == Signature::from_ints({0, 0, 1, 1}));
  CHECK(resolve_space("euclidean3") == Signature::from_ints({0, 1, 1}));
  CHECK(resolve_space("hyperbolic:4") == Signature::from_ints({-1, 1, 1, 1}));
  CHECK(resolve_space("{1,0}") == Signature::from_ints({1, 0}));
  CHECK_THROWS_AS(resolve_space("nowhere"), GeometryError);
  std::set<std::string> names;
  for (const NamedSpace& space : named_spaces()) names.insert(space.name);
  for (const char* required : {"elliptic", "euclidean", "hyperbolic", "galilean", "minkowski", "desitter", "antidesitter",
                               "galilean-spacetime"}) {
    CHECK(names.count(required) == 1);
  }
}

TEST_CASE("signatures from quadratic forms") {
  CHECK(signature_from_form({1, -1, -1, -1}, TypeValue::parabolic()).sig == Signature::from_ints({0, -1, 1, 1}));
  CHECK(signature_from_form({1, -1, -1, -1}, TypeValue::elliptic()).sig == Signature::from_ints({1, -1, 1, 1}));
  const FormSignature degenerate = signature_from_form({1, 1, 1, 0}, TypeValue::parabolic());
  CHECK(degenerate.sig == Signature::from_ints({0, 1, 1, 0}));
  const FormSignature trailing = signature_from_form({1, 0, 0}, TypeValue::parabolic());
  CHECK(trailing.ambiguous == std::vector<int>{3});
  CHECK_THROWS_AS(signature_from_form({-1, 1}, TypeValue::parabolic()), GeometryError);
  CHECK_THROWS_AS(signature_from_form({1, 0, 1}, TypeValue::parabolic()), GeometryError);
  const FormSignature reordered = signature_from_form({0, -1, 1}, TypeValue::parabolic(), true);
  CHECK(reordered.reordered);
  CHECK(reordered.sig.element(1).value() == 0);
  CHECK(form_interval({1, -1}, make_vector({0, 0}), make_vector({2, 1})) == 3.0);
}

TEST_CASE("metaspace and tangent signatures") {
  CHECK(metaspace_signature(Signature::from_ints({-1, 1})) == Signature::from_ints({0, -1, 1}));
  CHECK(metaspace_signature(Signature()) == Signature::from_ints({0}));
  CHECK(tangent_signature(Signature::from_ints({-1, 1})) == Signature::from_ints({0, 1}));
}

TEST_CASE("tiling classification") {
  std::set<std::pair<int, int>> flat;
  std::set<std::pair<int, int>> curved;
  for (int p = 3; p <= 60; ++p) {
    for (int q = 3; q <= 60; ++q) {
      if (tiling_curvature(p, q) == 0) flat.insert({p, q});
      if (tiling_curvature(p, q) == 1) curved.insert({p, q});
    }
  }
  CHECK(flat == std::set<std::pair<int, int>>{{4, 4}, {6, 3}, {3, 6}});
  CHECK(curved == std::set<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 3}});
  CHECK(tiling_group(4, 4).plane_sig == Signature::from_ints({0, 1}));
  CHECK(tiling_group(5, 3).plane_sig == Signature::from_ints({1, 1}));
}

TEST_CASE("hyperbolic (3,7) group") {
  const CrystalGroup group = tiling_group(3, 7);
  CHECK(group.plane_sig == Signature::from_ints({-1, 1}));
  for (const Motion& g : group.generators) CHECK(is_gm_orthogonal(g.matrix(), group.plane_sig).ok);
  CHECK(gap(power(group.generators[1].matrix(), 7), Matrix::Identity(3, 3)) < 1e-8);
  const double b = std::acosh(std::cos(std::numbers::pi / 3) / std::sin(std::numbers::pi / 7));
  CHECK(b > 0.0);
}

TEST_CASE("every tiling generator is a motion of its plane") {
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 8; ++q) {
      for (const CrystalGroup& group : {tiling_group(p, q), dual_tiling_group(p, q)}) {
        for (const Motion& g : group.generators) CHECK(is_gm_orthogonal(g.matrix(), group.plane_sig).ok);
      }
      const Matrix turn = tiling_group(p, q).generators[1].matrix();
      CHECK(gap(power(turn, q), Matrix::Identity(3, 3)) < 1e-8);
    }
  }
}

TEST_CASE("dual tiling groups") {
  const CrystalGroup flat_dual = dual_tiling_group(4, 4);
  CHECK(flat_dual.plane_sig == Signature::from_ints({1, 0}));
  CHECK(gap(flat_dual.generators[0].matrix(), main_rotation(1, std::numbers::pi / 2, flat_dual.plane_sig).matrix()) < 1e-15);
  CHECK(dual_tiling_group(3, 7).plane_sig == Signature::from_ints({1, -1}));
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{3, 7}, {5, 3}, {4, 5}}) {
    const CrystalGroup primal = tiling_group(p, q);
    const CrystalGroup dual = dual_tiling_group(p, q);
    REQUIRE(dual_transform(primal.generators[0]).signature() == dual.plane_sig);
    const Matrix xi_step = dual_transform(primal.generators[0]).matrix();
    const Matrix xi_turn = dual_transform(primal.generators[1]).matrix();
    const Matrix dual_step = dual.generators[1].matrix();
    const Matrix dual_turn = dual.generators[0].matrix();
    CHECK(std::min(gap(xi_step, dual_step), gap(xi_step, inverse(dual.generators[1]).matrix())) < 1e-12);
    CHECK(std::min(gap(xi_turn, dual_turn), gap(xi_turn, inverse(dual.generators[0]).matrix())) < 1e-12);
  }
}

TEST_CASE("duality transform") {
  const Signature plane = Signature::from_ints({-1, 0});
  CHECK(dual_transform(Motion::identity(plane)).matrix().isIdentity(0.0));
  const Motion eta = Motion::trusted(anti_transpose(main_rotation(1, 0.4, plane).matrix()), plane.reversed());
  CHECK(gap(eta.matrix(), main_rotation(2, 0.4, plane.reversed()).matrix()) < 1e-15);
  testing::Sampler sampler(71);
  const CrystalGroup group = tiling_group(3, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Motion lhs = Motion::identity(group.plane_sig);
    Motion rhs = Motion::identity(group.plane_sig);
    const int length = sampler.integer(1, 6);
    for (int i = 0; i < length; ++i) {
      const Motion& g = group.generators[sampler.integer(0, 1)];
      (i % 2 == 0 ? lhs : rhs) = compose(i % 2 == 0 ? lhs : rhs, sampler.integer(0, 1) ? g : inverse(g));
    }
    const Matrix joint = dual_transform(compose(lhs, rhs)).matrix();
    const Matrix split = dual_transform(lhs).matrix() * dual_transform(rhs).matrix();
    CHECK(std::min(gap(joint, split), gap(joint, -split)) < 1e-10);
    CHECK(is_gm_orthogonal(joint, group.plane_sig.reversed(), 1e-8).ok);
  }
}

TEST_CASE("linear plane groups") {
  const CrystalGroup galilean = linear_plane_group(LinearPlane::Galilean, {});
  CHECK(galilean.plane_sig == Signature::from_ints({0, 0}));
  Matrix shear(3, 3);
  shear << 1, 0, 0, 1, 1, 0, 0, 0, 1;
  CHECK(gap(galilean.generators[0].matrix(), shear) == 0.0);

  LinearPlaneParams params;
  params.u = 2;
  params.plus = true;
  const CrystalGroup minkowski = linear_plane_group(LinearPlane::Minkowski, params);
  REQUIRE(minkowski.lattice.has_value());
  double b = 0.0;
  double phi = 0.0;
  for (const auto& [name, value] : minkowski.params) {
    if (name == "b") b = value;
    if (name == "phi") phi = value;
  }
  CHECK(b == doctest::Approx(std::sqrt(3.0)));
  CHECK(phi == doctest::Approx(std::acosh(2.0)));
  const Matrix boost = minkowski.generators[1].matrix();
  const MVector p_image = boost * make_vector({0, params.a, 0});
  const MVector q_image = boost * make_vector({0, 0, b});
  CHECK(p_image(1) / params.a == doctest::Approx(minkowski.lattice->u));
  CHECK(p_image(2) / b == doctest::Approx(minkowski.lattice->v));
  CHECK(q_image(1) / params.a == doctest::Approx(minkowski.lattice->r));
  CHECK(q_image(2) / b == doctest::Approx(minkowski.lattice->t));
  params.u = 1;
  CHECK_THROWS_AS(linear_plane_group(LinearPlane::Minkowski, params), GeometryError);
}

TEST_CASE("curved linear-plane groups") {
  const CrystalGroup galilean = curved_galilean_group(2);
  CHECK(galilean.plane_sig == Signature::from_ints({-1, 0}));
  for (const Motion& g : galilean.generators) CHECK(is_gm_orthogonal(g.matrix(), galilean.plane_sig).ok);
  const CrystalGroup minkowski = curved_minkowski_group(3, 8);
  CHECK(minkowski.plane_sig == Signature::from_ints({-1, -1}));
  CHECK_THROWS_AS(curved_minkowski_group(3, 7), GeometryError);
}

TEST_CASE("orbits") {
  const CrystalGroup square = tiling_group(4, 4);
  CHECK(orbit(square, 0).nodes.size() == 1);
  const Orbit grid = orbit(square, 2);
  CHECK(grid.nodes.size() == 13);
  for (const MVector& node : grid.nodes) {
    const double x = node(1) / node(0) / 2.0;
    const double y = node(2) / node(0) / 2.0;
    CHECK(std::abs(x - std::round(x)) < 1e-9);
    CHECK(std::abs(y - std::round(y)) < 1e-9);
    CHECK(std::abs(std::round(x)) + std::abs(std::round(y)) <= 2.0);
  }
  REQUIRE(grid.min_distance.has_value());
  CHECK(*grid.min_distance == doctest::Approx(2.0));
  const Orbit hyper = orbit(tiling_group(3, 7), 3);
  REQUIRE(hyper.min_distance.has_value());
  CHECK(*hyper.min_distance > 0.1);
  CHECK_THROWS_AS(orbit(tiling_group(3, 7), 6, 1e-7, 100), GeometryError);
}

TEST_CASE("point distances") {
  const Signature flat = Signature::from_ints({0, 1});
  CHECK(*point_distance(make_vector({1, 0, 0}), make_vector({1, 3, 4}), flat) == doctest::Approx(5.0));
  const Signature sphere = Signature::from_ints({1, 1});
  CHECK(*point_distance(make_vector({1, 0, 0}), main_rotation(1, 0.7, sphere).apply(make_vector({1, 0, 0})), sphere) ==
        doctest::Approx(0.7));
  const Signature minkowski_plane = Signature::from_ints({0, -1});
  CHECK_FALSE(point_distance(make_vector({1, 0, 0}), make_vector({1, 0, 1}), minkowski_plane).has_value());
}

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "homspace/errors.hpp"
#include "homspace/metaspace.hpp"
#include "homspace/motions.hpp"

using namespace homspace;

namespace {

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const GeometryError& err) {
    return err.code();
  }
  FAIL("expected a GeometryError");
  return ErrorCode::DomainError;
}

// Limit vector in the plane spanned by e0, e1 when k1 = -1.
MVector random_limit(testing::Sampler& sampler, const Signature& sig) {
  MVector x = MVector::Zero(sig.dimension() + 1);
  x(0) = 1.0;
  x(1) = 1.0;
  return sampler.uniform(0.5, 2.0) * sampler.motion(sig).apply(x);
}

}  // namespace

TEST_CASE("meta product") {
  for (const Signature& sig : testing::signatures_up_to(3)) {
    const MVector e = coordinate_vector(sig.dimension() + 1, 0);
    CHECK(meta_product(e, e, sig) == 1.0);
    CHECK(meta_product(e, coordinate_vector(sig.dimension() + 1, sig.dimension()), sig) == 0.0);
  }
  CHECK(meta_product(make_vector({1, 1, 0}), make_vector({1, 0, 1}), Signature::from_ints({1, 1})) == 1.0);
  CHECK_THROWS_AS(meta_product(make_vector({1, 0}), make_vector({1, 0}), Signature::from_ints({1, 1})), GeometryError);
}

TEST_CASE("indexed products") {
  const Signature plane = Signature::from_ints({0, -1});
  for (int i = 0; i <= 2; ++i) CHECK(product_i(coordinate_vector(3, i), coordinate_vector(3, i), i, plane) == 1.0);
  CHECK(product_i(make_vector({0, 0, 1}), make_vector({0, 0, 1}), 1, plane) == -1.0);
  CHECK(code_of([&] { product_i(make_vector({1, 0, 0}), make_vector({1, 0, 0}), 1, plane); }) ==
        ErrorCode::InfiniteContribution);
  CHECK_FALSE(product_defined(make_vector({1, 0, 0}), make_vector({1, 0, 0}), 1, plane));
  testing::Sampler sampler(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig = testing::signatures_up_to(3)[sampler.integer(0, 38)];
    const MVector x = sampler.vector(sig.dimension() + 1);
    const MVector y = sampler.vector(sig.dimension() + 1);
    CHECK(std::abs(product_i(x, y, 0, sig) - meta_product(x, y, sig)) < 1e-12);
  }
}

TEST_CASE("vector index") {
  const Signature plane = Signature::from_ints({0, -1});
  CHECK(vector_index(coordinate_vector(3, 2), plane).value() == 2);
  CHECK(vector_index(make_vector({0, 1, 1}), plane).is_limit());
  CHECK(vector_index(make_vector({1, 0.3, 0.3}), Signature::from_ints({1, 1})).value() == 0);
  CHECK(code_of([&] { vector_index(make_vector({0, 0, 0}), plane); }) == ErrorCode::ZeroVector);
  CHECK(has_index(make_vector({0, 1, 1}), 1, plane) == false);
}

TEST_CASE("natural products") {
  const Signature sphere = Signature::from_ints({1, 1});
  const MVector x = normalize(make_vector({1, 0.2, 0.1}), sphere);
  const MVector y = normalize(make_vector({1, -0.4, 0.3}), sphere);
  CHECK(natural_product(x, y, sphere) == doctest::Approx(meta_product(x, y, sphere)));
  CHECK(natural_product(coordinate_vector(3, 1), coordinate_vector(3, 1), Signature::from_ints({0, -1})) == 1.0);
  testing::Sampler sampler(22);
  for (const Signature& sig : testing::signatures_up_to(4)) {
    for (int trial = 0; trial < 10; ++trial) {
      const MVector v = sampler.vector(sig.dimension() + 1);
      if (vector_index(v, sig).is_limit()) continue;
      CHECK(natural_square(v, sig) >= 0.0);
    }
  }
}

TEST_CASE("normalization and canonical points") {
  const Signature plane = Signature::from_ints({0, -1});
  CHECK(normalize(make_vector({2, 0, 0}), plane).isApprox(make_vector({1, 0, 0})));
  CHECK(normalize(make_vector({0, 0, 3}), plane).isApprox(make_vector({0, 0, 1})));
  const MVector once = normalize(make_vector({1, 0.5, 0.2}), Signature::from_ints({-1, 1}));
  CHECK((normalize(once, Signature::from_ints({-1, 1})) - once).lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK(code_of([&] { normalize(make_vector({0, 1, 1}), plane); }) == ErrorCode::LimitVector);
  CHECK(canonical_point(make_vector({-1, 0, 0})) == make_vector({1, 0, 0}));
  CHECK(canonical_point(make_vector({0, -2, 5})) == make_vector({0, 2, -5}));
  CHECK(canonical_point(make_vector({1, 3, 4})) == make_vector({1, 3, 4}));
  CHECK(code_of([&] { canonical_point(make_vector({0, 0, 0})); }) == ErrorCode::ZeroVector);
}

TEST_CASE("decomposition vectors") {
  const Signature plane = Signature::from_ints({0, -1});
  const DecompositionPair pair = decomposition_vectors(make_vector({0, 1, 1}), plane);
  CHECK(pair.a == make_vector({0, 1, 0}));
  CHECK(pair.b == make_vector({0, 0, 1}));
  CHECK(pair.index_a == 1);
  CHECK(pair.index_b == 2);
  const DecompositionPair scaled = decomposition_vectors(make_vector({0, -2.5, -2.5}), plane);
  CHECK(scaled.a == make_vector({0, -2.5, 0}));
  CHECK(scaled.b == make_vector({0, 0, -2.5}));
  CHECK(code_of([&] { decomposition_vectors(make_vector({1, 0, 0}), plane); }) == ErrorCode::NotLimit);

  const Signature space = Signature::from_ints({-1, 1, -1});
  testing::Sampler sampler(23);
  for (int trial = 0; trial < 100; ++trial) {
    const MVector x = random_limit(sampler, space);
    REQUIRE(vector_index(x, space).is_limit());
    const DecompositionPair p = decomposition_vectors(x, space);
    CHECK((p.a + p.b - x).lpNorm<Eigen::Infinity>() < 1e-9);
    CHECK(p.index_a < p.index_b);
    CHECK(space.pair(p.index_a, p.index_b).finite().value() == -1);
    const double square_a = product_i(p.a, p.a, p.index_a, space);
    const double square_b = product_i(p.b, p.b, p.index_b, space);
    CHECK(std::abs(square_a - square_b) < 1e-9 * std::max(1.0, square_a));
    CHECK(std::abs(product_i(p.a, p.b, p.index_a, space)) < 1e-9 * std::max(1.0, square_a));
    CHECK(std::abs(product_i(p.a, x, p.index_a, space)) > 1e-6);
    CHECK(std::abs(product_i(p.b, x, p.index_b, space)) > 1e-6);
  }
}

TEST_CASE("limit orthogonalization") {
  const Signature sig = Signature::from_ints({0, -1, 1});
  const MVector x = make_vector({0, 1, 1, 0});
  CHECK(code_of([&] { limit_orthogonalize(x, make_vector({0, 0, 0, 1}), sig); }) == ErrorCode::AlreadyOrthogonal);
  CHECK(code_of([&] { limit_orthogonalize(x, make_vector({0, 2, 2, 0}), sig); }) == ErrorCode::Degenerate);
  CHECK(code_of([&] { limit_orthogonalize(make_vector({0, 1, 0, 0}), x, sig); }) == ErrorCode::NotLimit);
  testing::Sampler sampler(24);
  for (int trial = 0; trial < 100; ++trial) {
    const double scale = sampler.uniform(0.5, 2.0);
    const MVector limit = scale * x;
    const MVector y = sampler.uniform(0.2, 3.0) * x + make_vector({0, 0, 0, sampler.uniform(0.5, 2.0)});
    const MVector z = limit_orthogonalize(limit, y, sig);
    const DecompositionPair p = decomposition_vectors(limit, sig);
    CHECK(std::abs(product_i(p.a, z, p.index_a, sig)) < 1e-9);
    CHECK(std::abs(product_i(p.b, z, p.index_b, sig)) < 1e-9);
    CHECK(vector_index(z, sig) == vector_index(y, sig));
    CHECK(natural_square(z, sig) == doctest::Approx(natural_square(y, sig)));
  }
}

TEST_CASE("limit translations") {
  const Signature plane = Signature::from_ints({0, -1});
  CHECK(limit_translation(0.0, plane).matrix().isIdentity(0.0));
  Matrix expected(3, 3);
  expected << 1, 0, 0, 1, 1, 0, 1, 0, 1;
  CHECK((limit_translation(1.0, plane).matrix() - expected).lpNorm<Eigen::Infinity>() < 1e-15);
  for (const int k1 : {-1, 0, 1}) {
    const Signature sig = Signature::from_ints({k1, -1});
    const Matrix product = compose(limit_translation(0.3, sig), limit_translation(0.5, sig)).matrix();
    CHECK((product - limit_translation(0.8, sig).matrix()).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(is_gm_orthogonal(limit_translation(0.7, sig).matrix(), sig).ok);
    CHECK_FALSE(limit_translation(0.2, sig).matrix().isIdentity(1e-9));
  }
  CHECK(code_of([&] { limit_translation(0.5, Signature::from_ints({1, 1})); }) == ErrorCode::WrongSignature);
}

TEST_CASE("products, indices and limits survive motions") {
  testing::Sampler sampler(25);
  for (const Signature& sig : testing::signatures_up_to(4)) {
    for (int trial = 0; trial < 8; ++trial) {
      const Motion motion = sampler.motion(sig);
      const MVector x = sampler.vector(sig.dimension() + 1);
      const MVector y = sampler.vector(sig.dimension() + 1);
      const MVector mx = motion.apply(x);
      const MVector my = motion.apply(y);
      const double scale = std::max(1.0, mx.squaredNorm() + my.squaredNorm());
      CHECK(std::abs(meta_product(mx, my, sig) - meta_product(x, y, sig)) < 1e-9 * scale);
      for (int i = 0; i <= sig.dimension(); ++i) {
        if (!product_defined(x, y, i, sig) || !product_defined(mx, my, i, sig)) continue;
        CHECK(std::abs(product_i(mx, my, i, sig) - product_i(x, y, i, sig)) < 1e-9 * scale);
      }
      const VectorIndex before = vector_index(x, sig);
      CHECK(vector_index(mx, sig) == before);
    }
  }
}

TEST_CASE("limit vectors stay limit and keep measure ratios") {
  const Signature sig = Signature::from_ints({-1, 1, -1});
  testing::Sampler sampler(26);
  for (int trial = 0; trial < 50; ++trial) {
    const MVector x = random_limit(sampler, sig);
    const double ratio = sampler.uniform(0.3, 3.0);
    const Motion motion = sampler.motion(sig);
    const MVector mx = motion.apply(x);
    CHECK(vector_index(mx, sig).is_limit());
    const double before = limit_measure(ratio * x, sig).value / limit_measure(x, sig).value;
    const double after = limit_measure(ratio * mx, sig).value / limit_measure(mx, sig).value;
    CHECK(before == doctest::Approx(ratio).epsilon(1e-9));
    CHECK(after == doctest::Approx(ratio).epsilon(1e-9));
    CHECK(limit_measure(x, sig).type.value() == 0);
  }
}

#include "homspace/metaspace.hpp"

#include <cmath>
#include <string>

#include "homspace/errors.hpp"

namespace homspace {

MVector make_vector(std::initializer_list<double> coords) {
  MVector out(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) out(i++) = c;
  return out;
}

MVector coordinate_vector(int size, int position) {
  if (position < 0 || position >= size) {
    fail(ErrorCode::IndexOutOfRange, "coordinate vector position out of range");
  }
  MVector out = MVector::Zero(size);
  out(position) = 1.0;
  return out;
}

int VectorIndex::value() const {
  if (index_ < 0) fail(ErrorCode::LimitVector, "limit vector has no index");
  return index_;
}

void check_size(const MVector& x, const Signature& sig) {
  if (x.size() != sig.dimension() + 1) {
    fail(ErrorCode::DimensionMismatch,
         "vector has " + std::to_string(x.size()) + " coordinates, signature " +
             sig.to_string() + " needs " + std::to_string(sig.dimension() + 1));
  }
}

double meta_product(const MVector& x, const MVector& y, const Signature& sig) {
  check_size(x, sig);
  check_size(y, sig);
  double sum = 0.0;
  for (int j = 0; j <= sig.dimension(); ++j) sum += sig.cumulative_factor(j) * x(j) * y(j);
  return sum;
}

namespace {

double contribution_floor(const MVector& x, const MVector& y, double tol) {
  return tol * x.lpNorm<Eigen::Infinity>() * y.lpNorm<Eigen::Infinity>();
}

}  // namespace

bool product_defined(const MVector& x, const MVector& y, int i, const Signature& sig,
                     double tol) {
  check_size(x, sig);
  check_size(y, sig);
  const double floor = contribution_floor(x, y, tol);
  for (int j = 0; j < i; ++j) {
    if (std::isinf(sig.pair_factor(i, j)) && std::abs(x(j) * y(j)) > floor) return false;
  }
  return true;
}

double product_i(const MVector& x, const MVector& y, int i, const Signature& sig, double tol) {
  check_size(x, sig);
  check_size(y, sig);
  if (i < 0 || i > sig.dimension()) {
    fail(ErrorCode::IndexOutOfRange, "product index " + std::to_string(i) + " out of range");
  }
  const double floor = contribution_floor(x, y, tol);
  double sum = 0.0;
  for (int j = 0; j <= sig.dimension(); ++j) {
    const double k = sig.pair_factor(i, j);
    const double term = x(j) * y(j);
    if (std::isinf(k)) {
      if (std::abs(term) > floor) {
        fail(ErrorCode::InfiniteContribution,
             "coordinate " + std::to_string(j) + " meets an infinite pair type in product " +
                 std::to_string(i));
      }
      continue;
    }
    sum += k * term;
  }
  return sum;
}

VectorIndex vector_index(const MVector& x, const Signature& sig, double tol) {
  check_size(x, sig);
  const double scale = x.lpNorm<Eigen::Infinity>();
  if (scale == 0.0) fail(ErrorCode::ZeroVector, "zero vector has no index");
  const double threshold = tol * scale * scale;
  for (int i = 0; i <= sig.dimension(); ++i) {
    if (!product_defined(x, x, i, sig, tol)) continue;
    if (product_i(x, x, i, sig, tol) > threshold) return VectorIndex::indexed(i);
  }
  return VectorIndex::limit();
}

bool has_index(const MVector& x, int i, const Signature& sig, double tol) {
  const double scale = x.lpNorm<Eigen::Infinity>();
  if (scale == 0.0 || !product_defined(x, x, i, sig, tol)) return false;
  return product_i(x, x, i, sig, tol) > tol * scale * scale;
}

int reference_index(const MVector& x, const Signature& sig, double tol) {
  const VectorIndex idx = vector_index(x, sig, tol);
  if (!idx.is_limit()) return idx.value();
  return decomposition_vectors(x, sig, tol).index_a;
}

double natural_product(const MVector& x, const MVector& y, const Signature& sig, double tol) {
  const int i = std::min(reference_index(x, sig, tol), reference_index(y, sig, tol));
  return product_i(x, y, i, sig, tol);
}

double natural_square(const MVector& x, const Signature& sig, double tol) {
  const VectorIndex idx = vector_index(x, sig, tol);
  if (idx.is_limit()) return 0.0;
  return product_i(x, x, idx.value(), sig, tol);
}

MVector normalize(const MVector& x, const Signature& sig, double tol) {
  const VectorIndex idx = vector_index(x, sig, tol);
  if (idx.is_limit()) fail(ErrorCode::LimitVector, "limit vectors cannot be normalized");
  return x / std::sqrt(product_i(x, x, idx.value(), sig, tol));
}

MVector canonical_point(const MVector& x, double tol) {
  const double scale = x.lpNorm<Eigen::Infinity>();
  if (scale == 0.0) fail(ErrorCode::ZeroVector, "zero vector is not a point");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) > tol * scale) return x(i) < 0.0 ? MVector(-x) : x;
  }
  return x;
}

DecompositionPair decomposition_vectors(const MVector& x, const Signature& sig, double tol) {
  if (!vector_index(x, sig, tol).is_limit()) {
    fail(ErrorCode::NotLimit, "decomposition requires a limit vector");
  }
  const double scale = x.lpNorm<Eigen::Infinity>();
  int first = 0;
  while (std::abs(x(first)) <= tol * scale) ++first;
  DecompositionPair pair{MVector::Zero(x.size()), MVector::Zero(x.size()), 0, 0};
  for (int j = first; j < x.size(); ++j) {
    if (sig.pair_factor(first, j) >= 0.0) {
      pair.a(j) = x(j);
    } else {
      pair.b(j) = x(j);
    }
  }
  if (pair.b.lpNorm<Eigen::Infinity>() <= tol * scale) {
    fail(ErrorCode::Degenerate, "limit vector without a negative part");
  }
  pair.index_a = vector_index(pair.a, sig, tol).value();
  pair.index_b = vector_index(pair.b, sig, tol).value();
  if (pair.index_a > pair.index_b) {
    std::swap(pair.a, pair.b);
    std::swap(pair.index_a, pair.index_b);
  }
  return pair;
}

MVector limit_orthogonalize(const MVector& x, const MVector& y, const Signature& sig,
                            double tol) {
  check_size(y, sig);
  const DecompositionPair pair = decomposition_vectors(x, sig, tol);
  const double on_a = product_i(pair.a, y, pair.index_a, sig, tol);
  const double on_b = product_i(pair.b, y, pair.index_b, sig, tol);
  const double floor = tol * std::max(1.0, x.lpNorm<Eigen::Infinity>() * y.lpNorm<Eigen::Infinity>());
  if (std::abs(on_a) <= floor && std::abs(on_b) <= floor) {
    fail(ErrorCode::AlreadyOrthogonal, "decomposition vectors are already orthogonal");
  }
  if (std::abs(on_a - on_b) > floor * 1e3) {
    fail(ErrorCode::NotOrthogonal, "vectors are not orthogonal in the formal sense");
  }
  const double square = product_i(pair.a, pair.a, pair.index_a, sig, tol);
  const MVector z = y - (on_a / square) * x;
  if (z.lpNorm<Eigen::Infinity>() <= tol * std::max(1.0, y.lpNorm<Eigen::Infinity>())) {
    fail(ErrorCode::Degenerate, "orthogonalization produced the zero vector");
  }
  return z;
}

LimitMeasure limit_measure(const MVector& x, const Signature& sig, double tol) {
  const DecompositionPair pair = decomposition_vectors(x, sig, tol);
  LimitMeasure out;
  out.value = std::sqrt(product_i(pair.a, pair.a, pair.index_a, sig, tol));
  return out;
}

}  // namespace homspace

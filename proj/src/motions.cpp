#include "homspace/motions.hpp"

#include <cmath>
#include <numbers>

#include "homspace/errors.hpp"

namespace homspace {

namespace {

Matrix rotation_matrix(int size, int i, int j, double phi, TypeValue type, double scale = 1.0) {
  const TrigValues t = gtrig(phi, type, scale);
  Matrix out = Matrix::Identity(size, size);
  out(i, i) = t.cos;
  out(i, j) = -type.factor() * t.sin;
  out(j, i) = t.sin;
  out(j, j) = t.cos;
  return out;
}

// Applies X <- X * R_ij(phi) touching only columns i and j.
void right_rotate(Matrix& x, int i, int j, double c, double s, TypeValue type) {
  const Eigen::VectorXd col_i = x.col(i);
  const Eigen::VectorXd col_j = x.col(j);
  x.col(i) = c * col_i + s * col_j;
  x.col(j) = -type.factor() * s * col_i + c * col_j;
}

Matrix block_inverse(const Matrix& m, const std::vector<TypeValue>& ks) {
  const auto size = m.rows();
  if (size == 1) return Matrix::Constant(1, 1, 1.0 / m(0, 0));
  std::size_t split = 0;
  while (split < ks.size() && !ks[split].is_zero()) ++split;
  if (split == ks.size()) {
    const Signature sig(ks);
    Matrix out(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        out(i, j) = m(j, i) * sig.pair_factor(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return out;
  }
  // k at 1-based position split + 1 vanishes: rows/cols 0..split form A.
  const auto a_size = static_cast<Eigen::Index>(split + 1);
  const auto c_size = size - a_size;
  const std::vector<TypeValue> a_ks(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(split));
  const std::vector<TypeValue> c_ks(ks.begin() + static_cast<std::ptrdiff_t>(split + 1), ks.end());
  const Matrix a_inv = block_inverse(m.topLeftCorner(a_size, a_size), a_ks);
  const Matrix c_inv = block_inverse(m.bottomRightCorner(c_size, c_size), c_ks);
  Matrix out = Matrix::Zero(size, size);
  out.topLeftCorner(a_size, a_size) = a_inv;
  out.bottomRightCorner(c_size, c_size) = c_inv;
  out.bottomLeftCorner(c_size, a_size) = -c_inv * m.bottomLeftCorner(c_size, a_size) * a_inv;
  return out;
}

}  // namespace

GMCheck is_gm_orthogonal(const Matrix& m, const Signature& sig, double tol) {
  GMCheck check;
  const int size = sig.dimension() + 1;
  if (m.rows() != size || m.cols() != size) {
    check.ok = false;
    check.worst = "matrix size does not match the signature";
    check.worst_violation = std::numeric_limits<double>::infinity();
    return check;
  }
  double worst_ratio = 0.0;
  auto record = [&](double violation, double allowed, const std::string& what) {
    if (violation <= allowed) return;
    check.ok = false;
    if (violation / allowed > worst_ratio) {
      worst_ratio = violation / allowed;
      check.worst = what;
      check.worst_violation = violation;
    }
  };
  for (int j = 0; j < size; ++j) {
    const MVector col = m.col(j);
    const double norm = col.lpNorm<Eigen::Infinity>();
    if (norm == 0.0) {
      record(1.0, tol, "column " + std::to_string(j) + " vanishes");
      continue;
    }
    const double allowed = tol * std::max(1.0, norm * norm);
    if (!has_index(col, j, sig, tol)) {
      record(1.0, tol, "column " + std::to_string(j) + " does not have index " + std::to_string(j));
      continue;
    }
    record(std::abs(product_i(col, col, j, sig, tol) - 1.0), allowed,
           "column " + std::to_string(j) + " is not normalized");
    for (int i = 0; i < j; ++i) {
      const MVector other = m.col(i);
      const double pair_allowed =
          tol * std::max(1.0, norm * other.lpNorm<Eigen::Infinity>());
      if (!product_defined(other, col, i, sig, tol)) {
        record(1.0, pair_allowed,
               "columns " + std::to_string(i) + "," + std::to_string(j) + " meet an infinite type");
        continue;
      }
      record(std::abs(product_i(other, col, i, sig, tol)), pair_allowed,
             "columns " + std::to_string(i) + "," + std::to_string(j) + " are not orthogonal");
    }
  }
  const double scale = std::max(1.0, m.lpNorm<Eigen::Infinity>());
  for (int r = 0; r < size; ++r) {
    for (int c = r + 1; c < size; ++c) {
      if (sig.pair_factor(r, c) == 0.0) {
        check.zero_block_residual = std::max(check.zero_block_residual, std::abs(m(r, c)));
        record(std::abs(m(r, c)), tol * scale,
               "entry (" + std::to_string(r) + "," + std::to_string(c) + ") must vanish");
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      double sum = 0.0;
      for (int p = 0; p < size; ++p) {
        const double k = sig.pair_factor(p, j);
        const double term = m(i, p) * m(j, p);
        if (std::isinf(k)) continue;  // matching entries vanish by the zero blocks
        sum += k * term;
      }
      check.row_residual = std::max(check.row_residual, std::abs(sum - (i == j ? 1.0 : 0.0)));
    }
  }
  return check;
}

Motion::Motion(Matrix entries, Signature sig, double tol)
    : entries_(std::move(entries)), sig_(std::move(sig)) {
  const GMCheck check = is_gm_orthogonal(entries_, sig_, tol);
  if (!check.ok) fail(ErrorCode::NotGMOrthogonal, "matrix is not GM-orthogonal: " + check.worst);
  canonicalize_sign();
}

Motion::Motion(Matrix entries, Signature sig, bool)
    : entries_(std::move(entries)), sig_(std::move(sig)) {
  if (entries_.rows() != sig_.dimension() + 1 || entries_.cols() != entries_.rows()) {
    fail(ErrorCode::DimensionMismatch, "motion matrix size does not match the signature");
  }
  canonicalize_sign();
}

Motion Motion::identity(const Signature& sig) {
  const int size = sig.dimension() + 1;
  return trusted(Matrix::Identity(size, size), sig);
}

Motion Motion::trusted(Matrix entries, Signature sig) {
  return Motion(std::move(entries), std::move(sig), true);
}

void Motion::canonicalize_sign() {
  const auto col = entries_.col(0);
  const double scale = col.lpNorm<Eigen::Infinity>();
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) > 1e-12 * scale) {
      if (col(i) < 0.0) entries_ = -entries_;
      return;
    }
  }
}

MVector Motion::apply(const MVector& x) const {
  check_size(x, sig_);
  return entries_ * x;
}

Motion main_rotation(int m, double phi, const Signature& sig) {
  if (m < 1 || m > sig.dimension()) {
    fail(ErrorCode::IndexOutOfRange, "main rotation index " + std::to_string(m) + " out of range");
  }
  return Motion::trusted(
      rotation_matrix(sig.dimension() + 1, m - 1, m, phi, sig.element(m), sig.scale(m)), sig);
}

Motion rotation(int i, int j, double phi, const Signature& sig) {
  if (i < 0 || j > sig.dimension() || i >= j) {
    fail(ErrorCode::IndexOutOfRange, "rotation plane (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") out of range");
  }
  return Motion::trusted(
      rotation_matrix(sig.dimension() + 1, i, j, phi, sig.pair(i, j).finite()), sig);
}

Motion compose(const Motion& lhs, const Motion& rhs) {
  if (!(lhs.signature() == rhs.signature())) {
    fail(ErrorCode::SignatureMismatch, "cannot compose motions of different signatures");
  }
  return Motion::trusted(lhs.matrix() * rhs.matrix(), lhs.signature());
}

Matrix gm_inverse(const Matrix& m, const Signature& sig) {
  if (m.rows() != sig.dimension() + 1 || m.cols() != m.rows()) {
    fail(ErrorCode::DimensionMismatch, "matrix size does not match the signature");
  }
  return block_inverse(m, sig.elements());
}

Motion inverse(const Motion& motion) {
  return Motion::trusted(gm_inverse(motion.matrix(), motion.signature()), motion.signature());
}

Matrix Decomposition::recompose(const Signature& sig) const {
  const int size = sig.dimension() + 1;
  Matrix out = Matrix::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    out(i, i) = sign * static_cast<double>(reflection[static_cast<std::size_t>(i)]);
  }
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
    out = out * rotation_matrix(size, it->i, it->j, -it->phi, it->type);
  }
  return out;
}

bool Decomposition::proper() const {
  for (int e : reflection) {
    if (e < 0) return false;
  }
  return true;
}

namespace {

Decomposition decompose_matrix(Matrix x, const Signature& sig, double tol) {
  const int n = sig.dimension();
  Decomposition out;
  const TypeValue elliptic = TypeValue::elliptic();
  const TypeValue hyperbolic = TypeValue::hyperbolic();
  const TypeValue parabolic = TypeValue::parabolic();
  for (int r = n; r >= 1; --r) {
    const double tiny = tol * std::max(1.0, x.row(r).lpNorm<Eigen::Infinity>());
    std::vector<int> equivalent;
    std::vector<int> interchangeable;
    std::vector<int> rigid;
    for (int c = 0; c < r; ++c) {
      const double k = sig.pair_factor(c, r);
      if (k > 0.0) {
        equivalent.push_back(c);
      } else if (k < 0.0) {
        interchangeable.push_back(c);
      } else {
        rigid.push_back(c);
      }
    }
    for (int c : equivalent) {
      if (std::abs(x(r, c)) <= tiny) continue;
      const double rho = std::hypot(x(r, c), x(r, r));
      const double cs = x(r, r) / rho;
      const double sn = -x(r, c) / rho;
      right_rotate(x, c, r, cs, sn, elliptic);
      x(r, c) = 0.0;
      out.rotations.push_back({c, r, std::atan2(sn, cs), elliptic});
    }
    if (!equivalent.empty() && x(r, r) < 0.0) {
      const int c = equivalent.front();
      right_rotate(x, c, r, -1.0, 0.0, elliptic);
      out.rotations.push_back({c, r, std::numbers::pi, elliptic});
    }
    if (!interchangeable.empty()) {
      const int p = interchangeable.front();
      for (std::size_t idx = 1; idx < interchangeable.size(); ++idx) {
        const int q = interchangeable[idx];
        if (std::abs(x(r, q)) <= tiny) continue;
        const double rho = std::hypot(x(r, p), x(r, q));
        const double cs = x(r, p) / rho;
        const double sn = x(r, q) / rho;
        right_rotate(x, p, q, cs, sn, elliptic);
        x(r, q) = 0.0;
        out.rotations.push_back({p, q, std::atan2(sn, cs), elliptic});
      }
      if (std::abs(x(r, p)) > tiny) {
        const double gap = x(r, r) * x(r, r) - x(r, p) * x(r, p);
        if (gap <= tol) {
          fail(ErrorCode::NotGMOrthogonal,
               "row " + std::to_string(r) + " is light-like; hyperbolic step impossible");
        }
        const double phi = std::atanh(-x(r, p) / x(r, r));
        const TrigValues t = gtrig(phi, hyperbolic);
        right_rotate(x, p, r, t.cos, t.sin, hyperbolic);
        x(r, p) = 0.0;
        out.rotations.push_back({p, r, phi, hyperbolic});
      }
    }
    for (int q : rigid) {
      if (std::abs(x(r, q)) <= tiny) continue;
      if (std::abs(x(r, r)) <= tol) {
        fail(ErrorCode::NotGMOrthogonal,
             "row " + std::to_string(r) + " has a vanishing diagonal; parabolic step impossible");
      }
      const double phi = -x(r, q) / x(r, r);
      right_rotate(x, q, r, 1.0, phi, parabolic);
      x(r, q) = 0.0;
      out.rotations.push_back({q, r, phi, parabolic});
    }
  }
  const double scale = std::max(1.0, x.lpNorm<Eigen::Infinity>());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      if (std::abs(x(i, j)) > 1e3 * tol * scale) {
        fail(ErrorCode::NotGMOrthogonal, "elimination left off-diagonal residue");
      }
    }
    if (std::abs(std::abs(x(i, i)) - 1.0) > 1e3 * tol * scale) {
      fail(ErrorCode::NotGMOrthogonal, "elimination left a non-unit diagonal");
    }
    out.reflection.push_back(x(i, i) < 0.0 ? -1 : 1);
  }
  return out;
}

bool all_negative(const std::vector<int>& reflection) {
  for (int e : reflection) {
    if (e > 0) return false;
  }
  return true;
}

}  // namespace

Decomposition decompose(const Motion& motion, double tol) {
  Decomposition direct = decompose_matrix(motion.matrix(), motion.signature(), tol);
  if (direct.proper()) return direct;
  if (all_negative(direct.reflection)) {
    for (int& e : direct.reflection) e = 1;
    direct.sign = -1;
    return direct;
  }
  // -M is the same motion; prefer it when its reflection part is trivial.
  Decomposition flipped = decompose_matrix(-motion.matrix(), motion.signature(), tol);
  if (flipped.proper() || all_negative(flipped.reflection)) {
    if (!flipped.proper()) {
      for (int& e : flipped.reflection) e = 1;
    } else {
      flipped.sign = -1;
    }
    return flipped;
  }
  return direct;
}

Motion parameterize(const Motion& motion, double p, double tol) {
  const Decomposition d = decompose(motion, tol);
  if (!d.proper()) fail(ErrorCode::ImproperMotion, "improper motions cannot be parameterized");
  Decomposition scaled = d;
  for (PlaneRotation& rot : scaled.rotations) rot.phi *= p;
  return Motion::trusted(scaled.recompose(motion.signature()), motion.signature());
}

bool is_proper(const Motion& motion, double tol) { return decompose(motion, tol).proper(); }

AxisRelation axis_relation(int i, int j, const Signature& sig) {
  if (i < 0 || j > sig.dimension() || i >= j) {
    fail(ErrorCode::IndexOutOfRange, "axis pair out of range");
  }
  const double k = sig.pair_factor(i, j);
  if (k > 0.0) return AxisRelation::Equivalent;
  if (k < 0.0) return AxisRelation::Interchangeable;
  return AxisRelation::NonInterchangeable;
}

std::string_view to_string(AxisRelation relation) {
  switch (relation) {
    case AxisRelation::Equivalent: return "equivalent";
    case AxisRelation::Interchangeable: return "interchangeable";
    case AxisRelation::NonInterchangeable: return "non-interchangeable";
  }
  return "unknown";
}

Motion limit_translation(double lambda, const Signature& sig) {
  if (sig.dimension() != 2 || sig.element(2).value() != -1) {
    fail(ErrorCode::WrongSignature, "limit translation needs a plane with k2 = -1, got " +
                                        sig.to_string());
  }
  const double k1 = sig.element(1).factor();
  const double half = k1 * lambda * lambda / 2.0;
  Matrix m(3, 3);
  m << 1.0, -k1 * lambda, k1 * lambda,
       lambda, 1.0 - half, half,
       lambda, -half, 1.0 + half;
  return Motion::trusted(std::move(m), sig);
}

}  // namespace homspace

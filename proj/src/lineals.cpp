#include "homspace/lineals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "homspace/errors.hpp"

namespace homspace {

namespace {

struct Member {
  MVector v;
  VectorIndex index;
  // Least decomposition index for limit vectors, the index otherwise.
  int reference = 0;
};

Member make_member(MVector v, const Signature& sig, double tol) {
  const VectorIndex idx = vector_index(v, sig, tol);
  const int reference = idx.is_limit() ? decomposition_vectors(v, sig, tol).index_a : idx.value();
  return Member{std::move(v), idx, reference};
}

double pair_floor(const MVector& x, const MVector& y, double tol) {
  return tol * std::max(1.0, x.lpNorm<Eigen::Infinity>() * y.lpNorm<Eigen::Infinity>());
}

// Formal product of r with a basis member, at the member's reference index.
bool formal_product(const MVector& r, const Member& u, const Signature& sig, double tol,
                    double& out) {
  if (!product_defined(r, u.v, u.reference, sig, tol)) return false;
  out = product_i(r, u.v, u.reference, sig, tol);
  return true;
}

MVector remove_component(const MVector& r, const Member& u, const Signature& sig, double tol) {
  if (!u.index.is_limit()) {
    return r - product_i(r, u.v, u.index.value(), sig, tol) * u.v;
  }
  double formal = 0.0;
  if (!formal_product(r, u, sig, tol, formal) || std::abs(formal) > 1e3 * pair_floor(r, u.v, tol)) {
    fail(ErrorCode::NoProjection, "vector is not orthogonal to a limit basis vector");
  }
  try {
    return limit_orthogonalize(u.v, r, sig, tol);
  } catch (const GeometryError& err) {
    if (err.code() == ErrorCode::AlreadyOrthogonal) return r;
    if (err.code() == ErrorCode::Degenerate) return MVector::Zero(r.size());
    if (err.code() == ErrorCode::NotOrthogonal) {
      fail(ErrorCode::NoProjection, "vector is not orthogonal to a limit basis vector");
    }
    throw;
  }
}

// Limit vectors get unit decomposition norm and canonical sign.
MVector scale_limit(const MVector& x, const Signature& sig, double tol) {
  const double measure = limit_measure(x, sig, tol).value;
  return canonical_point(x / measure, tol);
}

bool is_negligible(const MVector& r, double scale, double tol) {
  return r.lpNorm<Eigen::Infinity>() <= tol * std::max(1.0, scale);
}

// Lowest-index-first Gram-Schmidt that appends to an orthonormal family.
std::vector<Member> extend(std::vector<Member> basis, const std::vector<MVector>& candidates,
                           const Signature& sig, double tol, std::size_t max_count) {
  struct Pending {
    MVector r;
    double scale;
  };
  std::vector<Pending> pending;
  pending.reserve(candidates.size());
  for (const MVector& c : candidates) {
    check_size(c, sig);
    MVector r = c;
    for (const Member& u : basis) r = remove_component(r, u, sig, tol);
    pending.push_back({std::move(r), c.lpNorm<Eigen::Infinity>()});
  }
  while (basis.size() < max_count) {
    std::erase_if(pending, [&](const Pending& p) { return is_negligible(p.r, p.scale, tol); });
    if (pending.empty()) break;
    std::vector<VectorIndex> indices;
    indices.reserve(pending.size());
    for (const Pending& p : pending) indices.push_back(vector_index(p.r, sig, tol));
    std::size_t best = pending.size();
    for (std::size_t k = 0; k < pending.size(); ++k) {
      if (indices[k].is_limit()) continue;
      if (best == pending.size() || indices[k].value() < indices[best].value()) best = k;
    }
    MVector chosen;
    bool consumed = true;
    if (best < pending.size()) {
      chosen = normalize(pending[best].r, sig, tol);
    } else {
      // Only limit residuals remain: a pair that is not formally orthogonal
      // spans an indexed direction, which must be taken first.
      const Member first = make_member(pending.front().r, sig, tol);
      std::optional<MVector> combined;
      for (std::size_t k = 1; k < pending.size() && !combined; ++k) {
        double formal = 0.0;
        const bool defined = formal_product(pending[k].r, first, sig, tol, formal);
        if (defined && std::abs(formal) <= 1e3 * pair_floor(pending[k].r, first.v, tol)) continue;
        for (double s : {1.0, -1.0}) {
          const MVector z = first.v + s * pending[k].r;
          if (!is_negligible(z, pending[k].scale, tol) && !vector_index(z, sig, tol).is_limit()) {
            combined = normalize(z, sig, tol);
            break;
          }
        }
      }
      if (combined) {
        chosen = *combined;
        consumed = false;
      } else {
        chosen = scale_limit(first.v, sig, tol);
        best = 0;
      }
    }
    if (consumed) pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    Member added = make_member(chosen, sig, tol);
    if (added.index.is_limit()) {
      for (Member& u : basis) {
        if (u.index.is_limit()) continue;
        try {
          u.v = limit_orthogonalize(added.v, u.v, sig, tol);
        } catch (const GeometryError& err) {
          if (err.code() != ErrorCode::AlreadyOrthogonal) throw;
        }
      }
    }
    for (Pending& p : pending) p.r = remove_component(p.r, added, sig, tol);
    basis.push_back(std::move(added));
  }
  return basis;
}

std::vector<Member> members_of(const Lineal& lineal, double tol) {
  std::vector<Member> out;
  out.reserve(lineal.basis().size());
  for (const MVector& v : lineal.basis()) out.push_back(make_member(v, lineal.ambient(), tol));
  return out;
}

std::vector<MVector> vectors_of(const std::vector<Member>& members) {
  std::vector<MVector> out;
  out.reserve(members.size());
  for (const Member& m : members) out.push_back(m.v);
  return out;
}

void require_same_ambient(const Lineal& a, const Lineal& b) {
  if (!(a.ambient() == b.ambient())) {
    fail(ErrorCode::SignatureMismatch, "lineals live in different spaces");
  }
}

}  // namespace

Lineal::Lineal(std::vector<MVector> basis, Signature sig, std::vector<VectorIndex> indices)
    : basis_(std::move(basis)), ambient_(std::move(sig)), indices_(std::move(indices)) {}

Lineal Lineal::span(const std::vector<MVector>& vectors, const Signature& sig, double tol) {
  const std::vector<Member> members =
      extend({}, vectors, sig, tol, static_cast<std::size_t>(sig.dimension() + 1));
  std::vector<VectorIndex> indices;
  for (const Member& m : members) indices.push_back(m.index);
  return Lineal(vectors_of(members), sig, std::move(indices));
}

Lineal Lineal::from_basis(std::vector<MVector> basis, const Signature& sig, double tol) {
  std::vector<Member> members;
  int limits = 0;
  for (MVector& v : basis) {
    check_size(v, sig);
    if (v.lpNorm<Eigen::Infinity>() == 0.0) fail(ErrorCode::ZeroVector, "basis vector is zero");
    members.push_back(make_member(v, sig, tol));
    if (members.back().index.is_limit()) ++limits;
  }
  if (static_cast<int>(members.size()) + limits > sig.dimension() + 1) {
    fail(ErrorCode::DimensionBound,
         "basis of " + std::to_string(members.size()) + " vectors with " + std::to_string(limits) +
             " limit vectors exceeds the bound for dimension " + std::to_string(sig.dimension()));
  }
  const double check_tol = std::sqrt(tol);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Member& u = members[i];
    if (!u.index.is_limit()) {
      const double square = product_i(u.v, u.v, u.index.value(), sig, tol);
      if (std::abs(square - 1.0) > check_tol) {
        fail(ErrorCode::InputNotOrthonormal, "basis vector " + std::to_string(i) + " is not normalized");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Member& w = members[j];
      const int k = std::min(u.reference, w.reference);
      if (!product_defined(u.v, w.v, k, sig, tol) ||
          std::abs(product_i(u.v, w.v, k, sig, tol)) > check_tol * pair_floor(u.v, w.v, 1.0)) {
        fail(ErrorCode::InputNotOrthonormal,
             "basis vectors " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal");
      }
    }
  }
  std::vector<VectorIndex> indices;
  for (const Member& m : members) indices.push_back(m.index);
  return Lineal(std::move(basis), sig, std::move(indices));
}

Lineal Lineal::empty(const Signature& sig) { return Lineal({}, sig, {}); }

Lineal Lineal::point(const MVector& x, const Signature& sig, double tol) {
  return span({x}, sig, tol);
}

bool Lineal::is_limit() const {
  return std::any_of(indices_.begin(), indices_.end(), [](VectorIndex i) { return i.is_limit(); });
}

bool Lineal::is_proper() const {
  return std::any_of(indices_.begin(), indices_.end(),
                     [](VectorIndex i) { return !i.is_limit() && i.value() == 0; });
}

Signature Lineal::own_signature(double tol) const { return lineal_signature(*this, tol); }

Projection project(const MVector& v, const Lineal& lineal, double tol) {
  const Signature& sig = lineal.ambient();
  check_size(v, sig);
  // Members of mixed index are orthogonal only at the lower index, so
  // components are removed one at a time, lowest index first.
  std::vector<Member> members = members_of(lineal, tol);
  std::stable_sort(members.begin(), members.end(),
                   [](const Member& x, const Member& y) { return x.reference < y.reference; });
  MVector rest = v;
  for (const Member& member : members) {
    if (member.index.is_limit()) {
      double formal = 0.0;
      if (!formal_product(rest, member, sig, tol, formal) ||
          std::abs(formal) > 1e3 * pair_floor(rest, member.v, tol)) {
        fail(ErrorCode::NoProjection, "vector is not orthogonal to a limit basis vector");
      }
      continue;  // 0/0 coefficient, resolved to 0
    }
    rest -= product_i(rest, member.v, member.index.value(), sig, tol) * member.v;
  }
  return Projection{v - rest, rest};
}

std::vector<MVector> orthonormalize(const std::vector<MVector>& vectors, const Signature& sig,
                                    double tol) {
  const std::vector<Member> members =
      extend({}, vectors, sig, tol, static_cast<std::size_t>(sig.dimension() + 1));
  if (members.empty()) fail(ErrorCode::AllVectorsDegenerate, "all vectors are degenerate");
  return vectors_of(members);
}

std::vector<MVector> complete(const std::vector<MVector>& basis, const Signature& sig, double tol) {
  const Lineal validated = [&] {
    try {
      return Lineal::from_basis(basis, sig, tol);
    } catch (const GeometryError& err) {
      fail(ErrorCode::InputNotOrthonormal, std::string("cannot complete: ") + err.what());
    }
  }();
  std::vector<MVector> coords;
  for (int p = 0; p <= sig.dimension(); ++p) coords.push_back(coordinate_vector(sig.dimension() + 1, p));
  return vectors_of(extend(members_of(validated, tol), coords, sig, tol,
                           static_cast<std::size_t>(sig.dimension() + 1)));
}

Motion assemble_motion(const std::vector<MVector>& family, const Signature& sig, double tol) {
  const int size = sig.dimension() + 1;
  if (static_cast<int>(family.size()) != size) {
    fail(ErrorCode::DimensionMismatch, "a complete family needs n + 1 vectors");
  }
  // Bipartite matching of vectors to the columns whose index they carry.
  std::vector<int> column_owner(static_cast<std::size_t>(size), -1);
  std::function<bool(int, std::vector<bool>&)> augment = [&](int v, std::vector<bool>& seen) {
    for (int j = 0; j < size; ++j) {
      if (seen[static_cast<std::size_t>(j)] || !has_index(family[static_cast<std::size_t>(v)], j, sig, tol)) {
        continue;
      }
      seen[static_cast<std::size_t>(j)] = true;
      const int owner = column_owner[static_cast<std::size_t>(j)];
      if (owner < 0 || augment(owner, seen)) {
        column_owner[static_cast<std::size_t>(j)] = v;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < size; ++v) {
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    if (!augment(v, seen)) fail(ErrorCode::NotGMOrthogonal, "family indices cannot fill every column");
  }
  Matrix m(size, size);
  for (int j = 0; j < size; ++j) m.col(j) = family[static_cast<std::size_t>(column_owner[static_cast<std::size_t>(j)])];
  return Motion(std::move(m), sig, std::sqrt(tol));
}

Lineal canonical_basis(const Lineal& lineal, double tol) {
  const Signature& sig = lineal.ambient();
  const int size = sig.dimension() + 1;
  // GM projection depends on the basis when products degenerate, so project
  // onto a reference basis that depends on the span alone.
  Matrix columns(size, lineal.count());
  for (int c = 0; c < lineal.count(); ++c) columns.col(c) = lineal.basis()[static_cast<std::size_t>(c)].normalized();
  Eigen::ColPivHouseholderQR<Matrix> qr(columns);
  const Matrix q = qr.householderQ() * Matrix::Identity(size, lineal.count());
  std::vector<MVector> euclidean;
  for (int p = 0; p < size; ++p) euclidean.push_back(q * q.transpose().col(p));
  const Lineal reference = Lineal::span(euclidean, sig, tol);
  const Lineal& target = reference.count() == lineal.count() ? reference : lineal;
  std::vector<MVector> projections;
  for (int p = 0; p < size; ++p) {
    try {
      projections.push_back(project(coordinate_vector(size, p), target, tol).onto);
    } catch (const GeometryError& err) {
      if (err.code() != ErrorCode::NoProjection) throw;
    }
  }
  std::vector<Member> members = extend({}, projections, sig, tol, static_cast<std::size_t>(lineal.count()));
  if (static_cast<int>(members.size()) < lineal.count()) {
    members = extend(std::move(members), target.basis(), sig, tol, static_cast<std::size_t>(lineal.count()));
  }
  for (Member& m : members) {
    if (m.index.is_limit()) m.v = scale_limit(m.v, sig, tol);
  }
  return Lineal::from_basis(vectors_of(members), sig, tol);
}

namespace {

// Least sorted set of distinct indices, one carried by each vector. Vectors
// may share their least index (e0 and e2 in {-1,-1}), so plain least indices
// can repeat. Matchable index sets form a transversal matroid, where greedy
// selection in ascending order is optimal.
std::vector<int> distinct_indices(const std::vector<MVector>& vectors, const Signature& sig, double tol) {
  const int size = sig.dimension() + 1;
  std::vector<std::vector<bool>> carries(vectors.size(), std::vector<bool>(static_cast<std::size_t>(size)));
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    for (int j = 0; j < size; ++j) carries[v][static_cast<std::size_t>(j)] = has_index(vectors[v], j, sig, tol);
  }
  auto matchable = [&](const std::vector<int>& indices) {
    std::vector<int> owner(vectors.size(), -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t slot, std::vector<bool>& seen) {
      for (std::size_t v = 0; v < vectors.size(); ++v) {
        if (seen[v] || !carries[v][static_cast<std::size_t>(indices[slot])]) continue;
        seen[v] = true;
        if (owner[v] < 0 || augment(static_cast<std::size_t>(owner[v]), seen)) {
          owner[v] = static_cast<int>(slot);
          return true;
        }
      }
      return false;
    };
    for (std::size_t slot = 0; slot < indices.size(); ++slot) {
      std::vector<bool> seen(vectors.size(), false);
      if (!augment(slot, seen)) return false;
    }
    return true;
  };
  std::vector<int> chosen;
  for (int j = 0; j < size && chosen.size() < vectors.size(); ++j) {
    chosen.push_back(j);
    if (!matchable(chosen)) chosen.pop_back();
  }
  return chosen;
}

}  // namespace

Signature lineal_signature(const Lineal& lineal, double tol) {
  const Signature& sig = lineal.ambient();
  std::vector<MVector> indexed_vectors;
  std::vector<std::pair<int, int>> limits;
  for (const MVector& v : lineal.basis()) {
    if (vector_index(v, sig, tol).is_limit()) {
      const DecompositionPair pair = decomposition_vectors(v, sig, tol);
      limits.emplace_back(pair.index_a, pair.index_b);
    } else {
      indexed_vectors.push_back(v);
    }
  }
  const std::vector<int> indexed = distinct_indices(indexed_vectors, sig, tol);
  std::vector<TypeValue> out;
  if (limits.empty()) {
    for (std::size_t p = 1; p < indexed.size(); ++p) {
      out.push_back(sig.pair(indexed[p - 1], indexed[p]).finite());
    }
    return Signature(std::move(out));
  }
  // Groups are runs of positions joined by nonzero signature elements.
  auto group_of = [&](int position) {
    int group = 0;
    for (int m = 1; m <= position; ++m) {
      if (sig.element(m).is_zero()) ++group;
    }
    return group;
  };
  const int group_count = group_of(sig.dimension()) + 1;
  std::vector<std::vector<int>> group_indexed(static_cast<std::size_t>(group_count));
  std::vector<int> group_limits(static_cast<std::size_t>(group_count), 0);
  for (int i : indexed) group_indexed[static_cast<std::size_t>(group_of(i))].push_back(i);
  for (const auto& pair : limits) ++group_limits[static_cast<std::size_t>(group_of(pair.first))];
  bool first_group = true;
  for (int g = 0; g < group_count; ++g) {
    const auto& idx = group_indexed[static_cast<std::size_t>(g)];
    const int lim = group_limits[static_cast<std::size_t>(g)];
    if (idx.empty() && lim == 0) continue;
    if (!first_group) out.push_back(TypeValue::parabolic());
    first_group = false;
    for (std::size_t p = 1; p < idx.size(); ++p) out.push_back(sig.pair(idx[p - 1], idx[p]).finite());
    if (!idx.empty() && lim > 0) out.push_back(TypeValue::parabolic());
    for (int l = 1; l < lim; ++l) out.push_back(TypeValue::elliptic());
  }
  return Signature(std::move(out));
}

namespace {

// Intersection of the spans by plain linear algebra (null space of [A | -B]).
std::vector<MVector> span_intersection(const Lineal& a, const Lineal& b, double tol) {
  const auto rows = static_cast<Eigen::Index>(a.ambient().dimension() + 1);
  const auto cols = static_cast<Eigen::Index>(a.count() + b.count());
  Matrix stacked(rows, cols);
  for (int i = 0; i < a.count(); ++i) stacked.col(i) = a.basis()[static_cast<std::size_t>(i)];
  for (int j = 0; j < b.count(); ++j) stacked.col(a.count() + j) = -b.basis()[static_cast<std::size_t>(j)];
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = std::sqrt(tol) * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::vector<MVector> out;
  for (Eigen::Index k = 0; k < cols; ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s > cutoff) continue;
    const Eigen::VectorXd coeff = svd.matrixV().col(k);
    MVector v = MVector::Zero(rows);
    for (int i = 0; i < a.count(); ++i) v += coeff(i) * a.basis()[static_cast<std::size_t>(i)];
    out.push_back(v);
  }
  return out;
}

}  // namespace

SumAndIntersection sum_and_intersection(const Lineal& a, const Lineal& b, double tol) {
  require_same_ambient(a, b);
  const Signature& sig = a.ambient();
  const std::size_t full = static_cast<std::size_t>(sig.dimension() + 1);
  try {
    std::vector<Member> sum = members_of(a, tol);
    std::vector<MVector> mirror = a.basis();
    std::vector<MVector> harvested;
    for (const MVector& v : b.basis()) {
      MVector residual = v;
      MVector a_part = MVector::Zero(v.size());
      std::vector<std::size_t> order(sum.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return sum[x].reference < sum[y].reference; });
      for (const std::size_t j : order) {
        const Member& u = sum[j];
        if (u.index.is_limit()) {
          residual = remove_component(residual, u, sig, tol);
          continue;
        }
        const double c = product_i(residual, u.v, u.index.value(), sig, tol);
        residual -= c * u.v;
        a_part += c * mirror[j];
      }
      if (is_negligible(residual, v.lpNorm<Eigen::Infinity>(), tol) || sum.size() >= full) {
        harvested.push_back(a_part);
        continue;
      }
      Member added = make_member(residual, sig, tol);
      if (added.index.is_limit()) fail(ErrorCode::NoProjection, "limit residual in sum");
      const double norm = std::sqrt(product_i(residual, residual, added.index.value(), sig, tol));
      added.v = residual / norm;
      mirror.push_back(-a_part / norm);
      sum.push_back(std::move(added));
    }
    return SumAndIntersection{Lineal::span(vectors_of(sum), sig, tol),
                              Lineal::span(harvested, sig, tol)};
  } catch (const GeometryError& err) {
    if (err.code() != ErrorCode::NoProjection) throw;
  }
  std::vector<MVector> both = a.basis();
  both.insert(both.end(), b.basis().begin(), b.basis().end());
  return SumAndIntersection{Lineal::span(both, sig, tol),
                            Lineal::span(span_intersection(a, b, tol), sig, tol)};
}

Lineal difference(const Lineal& a, const Lineal& b, double tol) {
  require_same_ambient(a, b);
  std::vector<MVector> residuals;
  for (const MVector& v : a.basis()) residuals.push_back(project(v, b, tol).ortho);
  return Lineal::span(residuals, a.ambient(), tol);
}

Matrix state_matrix(const std::vector<MVector>& vectors, const Signature& sig, double tol) {
  const auto size = static_cast<Eigen::Index>(vectors.size());
  if (size > sig.dimension() + 1) {
    fail(ErrorCode::DimensionMismatch, "state matrix needs at most n + 1 vectors");
  }
  Matrix w(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      w(i, j) = product_i(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)],
                          static_cast<int>(i), sig, tol);
    }
  }
  return w;
}

Matrix natural_gram(const std::vector<MVector>& vectors, const Signature& sig, double tol) {
  const auto size = static_cast<Eigen::Index>(vectors.size());
  std::vector<int> reference(vectors.size(), -1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].lpNorm<Eigen::Infinity>() > tol) reference[i] = reference_index(vectors[i], sig, tol);
  }
  Matrix g = Matrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const int ri = reference[static_cast<std::size_t>(i)];
      const int rj = reference[static_cast<std::size_t>(j)];
      if (ri < 0 || rj < 0) continue;
      g(i, j) = product_i(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)],
                          std::min(ri, rj), sig, tol);
    }
  }
  return g;
}

double MeasureValue::value() const {
  if (kind_ != Kind::Finite) fail(ErrorCode::DomainError, "measure value is not finite");
  return value_;
}

std::string_view case_label(MeasureCase c) {
  switch (c) {
    case MeasureCase::A: return "(a)";
    case MeasureCase::B: return "(b)";
    case MeasureCase::C: return "(c)";
    case MeasureCase::D: return "(d)";
    case MeasureCase::E: return "(e)";
    case MeasureCase::F: return "(f)";
    case MeasureCase::G: return "(g)";
    case MeasureCase::H: return "(h)";
  }
  return "?";
}

namespace {

MeasureResult infinite_measure(double w_onto, double w_ortho) {
  MeasureResult out;
  out.value = MeasureValue::infinite();
  out.complementary = MeasureValue::infinite();
  out.type = TypeValue::hyperbolic();
  out.measure_case = MeasureCase::H;
  out.w_onto = w_onto;
  out.w_ortho = w_ortho;
  return out;
}

MeasureResult zero_measure() {
  MeasureResult out;
  out.value = MeasureValue::finite(0.0);
  out.complementary = MeasureValue::undefined();
  out.measure_case = MeasureCase::A;
  out.ambiguous = true;
  out.w_onto = 1.0;
  return out;
}

}  // namespace

MeasureResult measure_between(const Lineal& a, const Lineal& b, double case_tol, double tol) {
  require_same_ambient(a, b);
  const Signature& sig = a.ambient();
  const bool limit = a.is_limit() || b.is_limit();
  const Lineal common = sum_and_intersection(a, b, tol).intersection;
  Lineal own_a = difference(a, common, tol);
  Lineal own_b = difference(b, common, tol);
  if (own_a.count() > own_b.count() ||
      (own_a.count() == own_b.count() && own_b.is_limit() && !own_a.is_limit())) {
    std::swap(own_a, own_b);
  }
  if (own_a.is_empty()) return zero_measure();

  std::vector<MVector> onto;
  std::vector<MVector> ortho;
  try {
    for (const MVector& v : own_a.basis()) {
      const Projection p = project(v, own_b, tol);
      onto.push_back(p.onto);
      ortho.push_back(p.ortho);
    }
  } catch (const GeometryError& err) {
    if (err.code() == ErrorCode::NoProjection && limit) return infinite_measure(0.0, 0.0);
    throw;
  }
  double w_onto = natural_gram(onto, sig, tol).determinant();
  double w_ortho = natural_gram(ortho, sig, tol).determinant();
  for (double* w : {&w_onto, &w_ortho}) {
    if (*w < -case_tol * std::max(1.0, std::abs(w_onto) + std::abs(w_ortho))) {
      fail(ErrorCode::UnclassifiableMeasure, "negative state determinant");
    }
    *w = std::max(*w, 0.0);
  }
  const double scaled = case_tol * std::max({1.0, w_onto, w_ortho});
  auto near = [&](double value, double target) { return std::abs(value - target) <= scaled; };

  MeasureResult out;
  out.w_onto = w_onto;
  out.w_ortho = w_ortho;
  if (limit && near(w_onto, w_ortho)) return infinite_measure(w_onto, w_ortho);
  if (near(w_onto, 1.0) && near(w_ortho, 0.0)) {
    out = zero_measure();
    out.w_onto = w_onto;
    out.w_ortho = w_ortho;
    return out;
  }
  if (near(w_onto, 0.0) && near(w_ortho, 1.0)) {
    out.value = MeasureValue::undefined();
    out.complementary = MeasureValue::finite(0.0);
    out.measure_case = MeasureCase::B;
    out.ambiguous = true;
    return out;
  }
  const double root_onto = std::sqrt(w_onto);
  const double root_ortho = std::sqrt(w_ortho);
  if (near(w_onto + w_ortho, 1.0)) {
    out.value = MeasureValue::finite(std::atan2(root_ortho, root_onto));
    out.complementary = MeasureValue::finite(std::atan2(root_onto, root_ortho));
    out.type = TypeValue::elliptic();
    out.measure_case = MeasureCase::C;
    return out;
  }
  if (near(w_onto, 1.0)) {
    out.value = MeasureValue::finite(root_ortho);
    out.complementary = MeasureValue::unmeasurable();
    out.type = TypeValue::parabolic();
    out.measure_case = MeasureCase::D;
    return out;
  }
  if (near(w_ortho, 1.0)) {
    out.value = MeasureValue::unmeasurable();
    out.complementary = MeasureValue::finite(root_onto);
    out.type = TypeValue::parabolic();
    out.measure_case = MeasureCase::E;
    return out;
  }
  if (near(w_onto - w_ortho, 1.0)) {
    out.value = MeasureValue::finite(std::atanh(root_ortho / root_onto));
    out.complementary = MeasureValue::unmeasurable();
    out.type = TypeValue::hyperbolic();
    out.measure_case = MeasureCase::F;
    return out;
  }
  if (near(w_ortho - w_onto, 1.0)) {
    out.value = MeasureValue::unmeasurable();
    out.complementary = MeasureValue::finite(std::atanh(root_onto / root_ortho));
    out.type = TypeValue::hyperbolic();
    out.measure_case = MeasureCase::G;
    return out;
  }
  fail(ErrorCode::UnclassifiableMeasure,
       "no measure case matches w' = " + std::to_string(w_onto) + ", w'' = " + std::to_string(w_ortho));
}

std::string_view to_string(Connectability::Kind kind) {
  switch (kind) {
    case Connectability::Kind::Connectable: return "connectable";
    case Connectability::Kind::Unconnectable: return "unconnectable";
    case Connectability::Kind::LimitPair: return "limit";
  }
  return "unknown";
}

Connectability connectable(const MVector& x, const MVector& y, const Signature& sig, double tol) {
  check_size(x, sig);
  check_size(y, sig);
  if (x.lpNorm<Eigen::Infinity>() == 0.0 || y.lpNorm<Eigen::Infinity>() == 0.0) {
    fail(ErrorCode::ZeroVector, "points must be nonzero");
  }
  const std::vector<MVector> family = orthonormalize({x, y}, sig, tol);
  Connectability out;
  if (family.size() == 1) {
    out.kind = Connectability::Kind::Connectable;
    out.distance = zero_measure();
    return out;
  }
  const VectorIndex idx = vector_index(family[1], sig, tol);
  if (idx.is_limit()) {
    out.kind = Connectability::Kind::LimitPair;
    return out;
  }
  const int j = idx.value();
  if (j <= 1 || sig.pair_factor(1, j) == 1.0) {
    out.kind = Connectability::Kind::Connectable;
    out.distance = measure_between(Lineal::point(x, sig, tol), Lineal::point(y, sig, tol),
                                   kCaseTolerance, tol);
    return out;
  }
  out.kind = Connectability::Kind::Unconnectable;
  return out;
}

MVector midpoint(const MVector& a, const MVector& b, const Signature& sig, double tol) {
  if (connectable(a, b, sig, tol).kind != Connectability::Kind::Connectable) {
    fail(ErrorCode::Unconnectable, "midpoint needs connectable points");
  }
  const MVector sum = a + b;
  if (is_negligible(sum, std::max(a.lpNorm<Eigen::Infinity>(), b.lpNorm<Eigen::Infinity>()), tol)) {
    fail(ErrorCode::AntipodalAmbiguity, "the two representatives cancel");
  }
  return canonical_point(normalize(sum, sig, tol), tol);
}

MVector centroid(const MVector& a, const MVector& b, const MVector& c, const Signature& sig,
                 double tol) {
  if (Lineal::span({a, b, c}, sig, tol).count() < 3) {
    fail(ErrorCode::DegenerateTriangle, "vertices are collinear");
  }
  const MVector sum = a + b + c;
  if (sum.lpNorm<Eigen::Infinity>() == 0.0 || vector_index(sum, sig, tol).is_limit()) {
    fail(ErrorCode::LimitSum, "vertex sum is a limit vector");
  }
  return canonical_point(normalize(sum, sig, tol), tol);
}

}  // namespace homspace

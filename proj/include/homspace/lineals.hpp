#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "homspace/metaspace.hpp"
#include "homspace/motions.hpp"
#include "homspace/sigcore.hpp"

namespace homspace {

inline constexpr double kCaseTolerance = 1e-7;

// Ordered orthonormal basis of a linear span, intersected with the space.
// Indexed vectors are normalized; limit vectors are kept with their own
// scale. The empty lineal has no basis vectors.
class Lineal {
 public:
  // Orthonormalizes the given vectors (lowest index first).
  static Lineal span(const std::vector<MVector>& vectors, const Signature& sig,
                     double tol = default_tolerance());
  // Checks that the basis is orthonormal and respects the index bound.
  static Lineal from_basis(std::vector<MVector> basis, const Signature& sig,
                           double tol = default_tolerance());
  static Lineal empty(const Signature& sig);
  static Lineal point(const MVector& x, const Signature& sig, double tol = default_tolerance());

  const std::vector<MVector>& basis() const { return basis_; }
  const Signature& ambient() const { return ambient_; }
  int count() const { return static_cast<int>(basis_.size()); }
  int dimension() const { return count() - 1; }
  bool is_empty() const { return basis_.empty(); }
  bool is_limit() const;
  // Contains a vector of index 0.
  bool is_proper() const;
  Signature own_signature(double tol = default_tolerance()) const;

 private:
  Lineal(std::vector<MVector> basis, Signature sig, std::vector<VectorIndex> indices);

  std::vector<MVector> basis_;
  Signature ambient_;
  std::vector<VectorIndex> indices_;
};

struct Projection {
  MVector onto;
  MVector ortho;
};

// Raises NoProjection when v is not orthogonal to a limit basis vector.
Projection project(const MVector& v, const Lineal& lineal, double tol = default_tolerance());

std::vector<MVector> orthonormalize(const std::vector<MVector>& vectors, const Signature& sig,
                                    double tol = default_tolerance());
std::vector<MVector> complete(const std::vector<MVector>& basis, const Signature& sig,
                              double tol = default_tolerance());
// Places each vector of a complete family in the column of its index.
Motion assemble_motion(const std::vector<MVector>& family, const Signature& sig,
                       double tol = default_tolerance());

Lineal canonical_basis(const Lineal& lineal, double tol = default_tolerance());
Signature lineal_signature(const Lineal& lineal, double tol = default_tolerance());

struct SumAndIntersection {
  Lineal sum;
  Lineal intersection;
};

SumAndIntersection sum_and_intersection(const Lineal& a, const Lineal& b,
                                        double tol = default_tolerance());
Lineal difference(const Lineal& a, const Lineal& b, double tol = default_tolerance());

// Entry (i, j) is v_i (.)_i v_j with i the position in the family.
Matrix state_matrix(const std::vector<MVector>& vectors, const Signature& sig,
                    double tol = default_tolerance());
// Gram matrix of natural products; zero vectors give zero rows.
Matrix natural_gram(const std::vector<MVector>& vectors, const Signature& sig,
                    double tol = default_tolerance());

class MeasureValue {
 public:
  enum class Kind { Finite, Infinite, Undefined, Unmeasurable };

  static MeasureValue finite(double value) { return MeasureValue(Kind::Finite, value); }
  static MeasureValue infinite() { return MeasureValue(Kind::Infinite, 0.0); }
  static MeasureValue undefined() { return MeasureValue(Kind::Undefined, 0.0); }
  static MeasureValue unmeasurable() { return MeasureValue(Kind::Unmeasurable, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  // Throws DomainError unless finite.
  double value() const;

 private:
  MeasureValue(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

enum class MeasureCase { A, B, C, D, E, F, G, H };
std::string_view case_label(MeasureCase c);

struct MeasureResult {
  MeasureValue value = MeasureValue::undefined();
  // Empty when the type is ambiguous.
  std::optional<TypeValue> type;
  MeasureValue complementary = MeasureValue::undefined();
  MeasureCase measure_case = MeasureCase::A;
  bool ambiguous = false;
  double w_onto = 0.0;
  double w_ortho = 0.0;
};

MeasureResult measure_between(const Lineal& a, const Lineal& b, double case_tol = kCaseTolerance,
                              double tol = default_tolerance());

struct Connectability {
  enum class Kind { Connectable, Unconnectable, LimitPair };
  Kind kind = Kind::Unconnectable;
  std::optional<MeasureResult> distance;
};

std::string_view to_string(Connectability::Kind kind);

Connectability connectable(const MVector& x, const MVector& y, const Signature& sig,
                           double tol = default_tolerance());
MVector midpoint(const MVector& a, const MVector& b, const Signature& sig,
                 double tol = default_tolerance());
MVector centroid(const MVector& a, const MVector& b, const MVector& c, const Signature& sig,
                 double tol = default_tolerance());

}  // namespace homspace

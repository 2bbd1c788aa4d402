#pragma once

#include <optional>

#include <Eigen/Dense>

#include "homspace/sigcore.hpp"

namespace homspace {

// Coordinates x_0..x_n of a metaspace vector. Carries no signature.
using MVector = Eigen::VectorXd;

MVector make_vector(std::initializer_list<double> coords);
MVector coordinate_vector(int size, int position);

class VectorIndex {
 public:
  static VectorIndex indexed(int index) { return VectorIndex(index); }
  static VectorIndex limit() { return VectorIndex(-1); }

  bool is_limit() const { return index_ < 0; }
  // Throws LimitVector for limit vectors.
  int value() const;

  friend bool operator==(VectorIndex, VectorIndex) = default;

 private:
  explicit VectorIndex(int index) : index_(index) {}
  int index_;
};

double meta_product(const MVector& x, const MVector& y, const Signature& sig);

// Sum of K_ij x_j y_j. Terms with infinite K_ij count as zero while x_j y_j
// is negligible and raise InfiniteContribution otherwise.
double product_i(const MVector& x, const MVector& y, int i, const Signature& sig,
                 double tol = default_tolerance());

// True when product_i(x, y, i) can be evaluated.
bool product_defined(const MVector& x, const MVector& y, int i, const Signature& sig,
                     double tol = default_tolerance());

VectorIndex vector_index(const MVector& x, const Signature& sig,
                         double tol = default_tolerance());

// True when x (.)_i x is defined and positive; a vector may have several
// indices, vector_index reports the least.
bool has_index(const MVector& x, int i, const Signature& sig, double tol = default_tolerance());

// The smaller decomposition index stands in for a limit vector.
int reference_index(const MVector& x, const Signature& sig, double tol = default_tolerance());

double natural_product(const MVector& x, const MVector& y, const Signature& sig,
                       double tol = default_tolerance());

// Natural square at the vector's own index (0 for limit vectors).
double natural_square(const MVector& x, const Signature& sig, double tol = default_tolerance());

MVector normalize(const MVector& x, const Signature& sig, double tol = default_tolerance());

MVector canonical_point(const MVector& x, double tol = default_tolerance());

struct DecompositionPair {
  MVector a;
  MVector b;
  int index_a = 0;
  int index_b = 0;
};

DecompositionPair decomposition_vectors(const MVector& x, const Signature& sig,
                                        double tol = default_tolerance());

// Returns z = y - t x with both decomposition vectors of x orthogonal to z.
MVector limit_orthogonalize(const MVector& x, const MVector& y, const Signature& sig,
                            double tol = default_tolerance());

struct LimitMeasure {
  double value = 0.0;
  TypeValue type = TypeValue::parabolic();
  // The value depends on the basis used for the decomposition.
  bool invariant = false;
};

LimitMeasure limit_measure(const MVector& x, const Signature& sig,
                           double tol = default_tolerance());

void check_size(const MVector& x, const Signature& sig);

}  // namespace homspace

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "homspace/metaspace.hpp"
#include "homspace/sigcore.hpp"

namespace homspace {

using Matrix = Eigen::MatrixXd;

struct GMCheck {
  bool ok = true;
  // Worst column or zero-block violation, empty when ok.
  std::string worst;
  double worst_violation = 0.0;
  // Largest deviation of the row relations from the identity.
  double row_residual = 0.0;
  // Largest entry inside a block that must vanish.
  double zero_block_residual = 0.0;
};

GMCheck is_gm_orthogonal(const Matrix& m, const Signature& sig,
                         double tol = default_tolerance());

// A GM-orthogonal matrix, sign-canonical: the first entry of column 0 that
// is not negligible is positive (M and -M act identically on points).
class Motion {
 public:
  // Validates and throws NotGMOrthogonal on failure.
  Motion(Matrix entries, Signature sig, double tol = default_tolerance());

  static Motion identity(const Signature& sig);
  // Skips validation; for matrices that are GM-orthogonal by construction.
  static Motion trusted(Matrix entries, Signature sig);

  const Matrix& matrix() const { return entries_; }
  const Signature& signature() const { return sig_; }
  int size() const { return static_cast<int>(entries_.rows()); }

  MVector apply(const MVector& x) const;

 private:
  Motion(Matrix entries, Signature sig, bool);
  void canonicalize_sign();

  Matrix entries_;
  Signature sig_;
};

Motion main_rotation(int m, double phi, const Signature& sig);
Motion rotation(int i, int j, double phi, const Signature& sig);

Motion compose(const Motion& lhs, const Motion& rhs);
Motion inverse(const Motion& motion);
// Inverse of a raw GM-orthogonal matrix; uses the block recursion whenever
// the signature contains a zero.
Matrix gm_inverse(const Matrix& m, const Signature& sig);

struct PlaneRotation {
  int i = 0;
  int j = 1;
  double phi = 0.0;
  TypeValue type;
};

struct Decomposition {
  // M * R_1 * ... * R_q = sign * diag(reflection), in application order.
  std::vector<PlaneRotation> rotations;
  std::vector<int> reflection;
  // -1 when the decomposition was taken of -M.
  int sign = 1;

  Matrix recompose(const Signature& sig) const;
  bool proper() const;
};

Decomposition decompose(const Motion& motion, double tol = default_tolerance());
Motion parameterize(const Motion& motion, double p, double tol = default_tolerance());
bool is_proper(const Motion& motion, double tol = default_tolerance());

enum class AxisRelation { Equivalent, Interchangeable, NonInterchangeable };

AxisRelation axis_relation(int i, int j, const Signature& sig);
std::string_view to_string(AxisRelation relation);

// The limit translation of a plane with k_2 = -1.
Motion limit_translation(double lambda, const Signature& sig);

}  // namespace homspace

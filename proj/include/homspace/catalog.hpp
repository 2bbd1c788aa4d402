#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homspace/metaspace.hpp"
#include "homspace/motions.hpp"
#include "homspace/sigcore.hpp"

namespace homspace {

struct NamedSpace {
  std::string name;
  Signature sig;
  std::string notes;
};

// Registry entries at their default dimensions.
const std::vector<NamedSpace>& named_spaces();

// Accepts a registry name with an optional dimension suffix ("euclidean3"
// or "euclidean:3") or a literal signature such as "{0,-1,1,1}".
Signature resolve_space(const std::string& text);

struct FormSignature {
  Signature sig;
  // 1-based signature positions whose value came from 0/0.
  std::vector<int> ambiguous;
  bool reordered = false;
};

// Coefficients of a diagonal quadratic form, each +1, -1 or 0. Without
// reorder the form must start with +1 and keep its zeros at the end.
FormSignature signature_from_form(const std::vector<int>& coeffs, TypeValue curvature,
                                  bool reorder = false);

// Sum of p_i (x_i - y_i)^2 over the form coefficients.
double form_interval(const std::vector<int>& coeffs, const MVector& x, const MVector& y);

Signature metaspace_signature(const Signature& sig);
// Linear space approximating the neighbourhood of a point.
Signature tangent_signature(const Signature& sig);

struct LatticeIntegers {
  long u = 0;
  long v = 0;
  long r = 0;
  long t = 0;
};

struct CrystalGroup {
  Signature plane_sig;
  std::vector<Motion> generators;
  std::vector<std::string> generator_names;
  // Defining parameters in construction order.
  std::vector<std::pair<std::string, double>> params;
  MVector lattice_seed;
  std::optional<LatticeIntegers> lattice;
};

int tiling_curvature(int p, int q);

// Symmetry group of the {p, q} tiling on the plane {k1, 1}.
CrystalGroup tiling_group(int p, int q, double euclidean_step = 1.0);
// The same group carried to the plane {1, k2} through duality.
CrystalGroup dual_tiling_group(int p, int q, double parabolic_step = 1.0);

enum class LinearPlane { Galilean, Minkowski };

struct LinearPlaneParams {
  // Lattice step along the first axis.
  double a = 1.0;
  // Galilean only: lattice step along the second axis.
  double b = 1.0;
  // Minkowski only: integer boost parameter and the sign choice.
  int u = 2;
  bool plus = true;
};

CrystalGroup linear_plane_group(LinearPlane kind, const LinearPlaneParams& params);
// Group on {-1, 0}, dual to the Minkowski lattice group.
CrystalGroup curved_galilean_group(int u, bool plus = true);
// Group on {-1, -1} built from the hyperbolic {p, q} triangle; q must be even.
CrystalGroup curved_minkowski_group(int p, int q);

// xi(M) = eta(M^-1), with eta the reflection across the secondary diagonal.
// The result acts on the reversed signature.
Motion dual_transform(const Motion& motion);
Matrix anti_transpose(const Matrix& m);

struct Orbit {
  std::vector<MVector> nodes;
  std::vector<std::pair<int, int>> edges;
  // Smallest distance between connectable nodes; empty below two nodes.
  std::optional<double> min_distance;
};

inline constexpr std::size_t kDefaultNodeCap = 50000;

// Depth bounds the number of seed-moving generator letters in a word;
// letters that fix the seed are applied freely.
Orbit orbit(const CrystalGroup& group, int depth, double tol = 1e-7,
            std::size_t node_cap = kDefaultNodeCap);

// Distance between two points of index 0, empty when they are not
// connectable.
std::optional<double> point_distance(const MVector& x, const MVector& y, const Signature& sig,
                                     double tol = default_tolerance());

}  // namespace homspace

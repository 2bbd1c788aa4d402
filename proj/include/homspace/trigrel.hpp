#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "homspace/sigcore.hpp"

namespace homspace {

// One triangle element: known, not yet solved, or left free by a dilation.
class Part {
 public:
  enum class State { Unknown, Known, Undetermined };

  static Part known(double value) { return Part(State::Known, value); }
  static Part unknown() { return Part(State::Unknown, 0.0); }
  static Part undetermined() { return Part(State::Undetermined, 0.0); }

  State state() const { return state_; }
  bool is_known() const { return state_ == State::Known; }
  // Throws Undetermined unless known.
  double value() const;

 private:
  Part(State state, double value) : state_(state), value_(value) {}
  State state_;
  double value_;
};

// Edges a, b, c have type k1; alpha and gamma are internal angles and
// beta_prime the external angle at the vertex opposite b (type k2).
struct Triangle {
  Part a = Part::unknown();
  Part b = Part::unknown();
  Part c = Part::unknown();
  Part alpha = Part::unknown();
  Part beta_prime = Part::unknown();
  Part gamma = Part::unknown();
  // Elliptic inputs were reduced into the principal domain.
  bool reduced = false;
};

// Vertices A = E, C = R1(b) E, B = R2(alpha) R1(c) E.
Triangle solve_triangle_sas(double b, double c, double alpha, const Signature& plane);

// Largest violation over the sine law and the cosine and tangent laws.
// Equations whose quantities are not all finite are skipped.
double triangle_residual(const Triangle& triangle, const Signature& plane);

// Right angle at C. Leg a has type k1 k2, leg b and hypotenuse c type k1,
// alpha sits at A (opposite a) and beta_prime at B.
struct RightTriangle {
  Part a = Part::unknown();
  Part b = Part::unknown();
  Part c = Part::unknown();
  Part alpha = Part::unknown();
  Part beta_prime = Part::unknown();
};

inline constexpr double kRightTriangleTolerance = 1e-9;

RightTriangle solve_right_triangle(const RightTriangle& known, const Signature& plane);
double right_triangle_residual(const RightTriangle& triangle, const Signature& plane);

enum class Relation { Less, Equal, Greater };
std::string_view to_string(Relation relation);

// Directions of: a vs b - c, b vs a + c, alpha vs beta' - gamma and
// beta' vs alpha + gamma, where b is the edge opposite the external angle.
struct InequalityProfile {
  Relation shortest_edge;
  Relation longest_edge;
  Relation internal_angle;
  Relation external_angle;
};

InequalityProfile triangle_inequality_profile(const Signature& plane);

struct AreaMeasure {
  double value = 0.0;
  TypeValue type;
};

// Area of the right triangle with legs a (type k1 k2) and b (type k1).
AreaMeasure right_triangle_area(double a, double b, const Signature& plane);

// Polar quadrature of the same area around the vertex opposite leg a.
// Test oracle only.
double area_integral_oracle(double a, double b, const Signature& plane, int steps = 2000);

struct VolumeType {
  bool parabolic = false;
  // Product of the cumulative types; not established beyond the plane.
  TypeValue conjectured;
};

VolumeType volume_type(const Signature& sig);

enum class Separability { NonSeparable, WeakSeparable, StrongSeparable };
std::string_view to_string(Separability separability);
Separability separability_class(const Signature& sig);

}  // namespace homspace

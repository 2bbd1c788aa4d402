#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace homspace {

// Global structural tolerance. Every tolerance parameter in the library
// defaults to this value at call time.
double default_tolerance();
void set_default_tolerance(double tol);

// Elliptic (+1), parabolic (0) or hyperbolic (-1).
class TypeValue {
 public:
  constexpr TypeValue() = default;

  static TypeValue from_int(int value);
  static constexpr TypeValue elliptic() { return TypeValue(1); }
  static constexpr TypeValue parabolic() { return TypeValue(0); }
  static constexpr TypeValue hyperbolic() { return TypeValue(-1); }

  constexpr int value() const { return value_; }
  constexpr double factor() const { return static_cast<double>(value_); }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr TypeValue operator*(TypeValue lhs, TypeValue rhs) {
    return TypeValue(static_cast<std::int8_t>(lhs.value_ * rhs.value_));
  }
  friend constexpr bool operator==(TypeValue, TypeValue) = default;

 private:
  constexpr explicit TypeValue(int value)
      : value_(static_cast<std::int8_t>(value)) {}

  std::int8_t value_ = 1;
};

// A type that may also be infinite (reciprocal of a zero type).
class ExtendedType {
 public:
  constexpr ExtendedType(TypeValue finite) : finite_(finite) {}  // NOLINT
  static constexpr ExtendedType infinite() {
    ExtendedType result(TypeValue::elliptic());
    result.infinite_ = true;
    return result;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Throws InconsistentSignature when infinite.
  TypeValue finite() const;
  // +infinity for the infinite type.
  double factor() const;
  ExtendedType reciprocal() const;

  friend ExtendedType operator*(ExtendedType lhs, ExtendedType rhs);
  friend constexpr bool operator==(ExtendedType, ExtendedType) = default;

 private:
  TypeValue finite_;
  bool infinite_ = false;
};

std::string to_string(ExtendedType type);

class Signature {
 public:
  Signature();
  explicit Signature(std::vector<TypeValue> elements,
                     std::vector<double> scales = {});

  static Signature from_ints(const std::vector<int>& elements);
  static Signature from_ints(std::initializer_list<int> elements);
  // Accepts "{-1, 1}" with optional whitespace; "{}" is the empty signature.
  static Signature parse(std::string_view text);

  int dimension() const { return static_cast<int>(elements_.size()); }
  // k_m for m in 1..n.
  TypeValue element(int m) const;
  // K_m for m in 0..n.
  TypeValue cumulative(int m) const;
  // K_ij for i, j in 0..n.
  ExtendedType pair(int i, int j) const;
  // Table lookup of pair(i, j).factor() without range checks.
  double pair_factor(int i, int j) const {
    return pair_table_[static_cast<std::size_t>(i * (dimension() + 1) + j)];
  }
  double cumulative_factor(int m) const {
    return cumulative_[static_cast<std::size_t>(m)].factor();
  }
  double scale(int m) const;
  bool has_zero() const;

  const std::vector<TypeValue>& elements() const { return elements_; }
  std::vector<int> to_ints() const;
  std::string to_string() const;
  Signature reversed() const;

  friend bool operator==(const Signature& lhs, const Signature& rhs) {
    return lhs.elements_ == rhs.elements_;
  }

 private:
  void check_index(int i, const char* what) const;

  std::vector<TypeValue> elements_;
  std::vector<TypeValue> cumulative_;
  std::vector<double> pair_table_;
  std::vector<double> scales_;
};

TypeValue cumulative_type(const Signature& sig, int m);
ExtendedType pair_type(const Signature& sig, int i, int j);

struct TrigValues {
  double cos = 1.0;
  double sin = 0.0;
  // +-infinity when cos is exactly zero.
  double tan = 0.0;
};

TrigValues gtrig(double phi, TypeValue k, double scale = 1.0);
double gcos(double phi, TypeValue k);
double gsin(double phi, TypeValue k);
double gtan(double phi, TypeValue k);

enum class TrigFunction { Cos, Sin, Tan };

// Principal inverse; elliptic acos lands in [0, pi], asin in [-pi/2, pi/2].
double gtrig_inverse(double x, TrigFunction which, TypeValue k);

// Angle phi with (C(phi), S(phi)) proportional to (c, s) for type k.
// For k = 1 the result is in (-pi, pi]; for k = -1 it requires |s| < c.
double garg(double c, double s, TypeValue k);

// Reference series of C and S, used to cross-check the closed forms.
TrigValues gtrig_series(double phi, TypeValue k, int terms = 40);

}  // namespace homspace

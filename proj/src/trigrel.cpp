#include "homspace/trigrel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "homspace/errors.hpp"

namespace homspace {

namespace {

void require_plane(const Signature& plane) {
  if (plane.dimension() != 2) {
    fail(ErrorCode::DimensionMismatch, "triangle relations need a plane signature, got " + plane.to_string());
  }
}

double relative_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

bool all_finite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double wrap_period(double x, double period, double lower) {
  double r = std::fmod(x - lower, period);
  if (r < 0.0) r += period;
  return r + lower;
}

}  // namespace

double Part::value() const {
  if (state_ != State::Known) fail(ErrorCode::Undetermined, "triangle part is not determined");
  return value_;
}

Triangle solve_triangle_sas(double b, double c, double alpha, const Signature& plane) {
  require_plane(plane);
  const TypeValue k1 = plane.element(1);
  const TypeValue k2 = plane.element(2);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Triangle out;
  // Elliptic rotations are 2 pi periodic, so the reduction leaves the
  // constructed vertices unchanged.
  if (k1.value() == 1) {
    const double rb = wrap_period(b, two_pi, 0.0);
    const double rc = wrap_period(c, two_pi, 0.0);
    out.reduced = out.reduced || rb != b || rc != c;
    b = rb;
    c = rc;
  }
  if (k2.value() == 1) {
    const double ra = wrap_period(alpha, two_pi, -std::numbers::pi);
    out.reduced = out.reduced || ra != alpha;
    alpha = ra;
  }
  const TrigValues tb = gtrig(b, k1);
  const TrigValues tc = gtrig(c, k1);
  const TrigValues ta = gtrig(alpha, k2);

  const double x = tb.sin * tc.cos - tb.cos * tc.sin * ta.cos;
  const double y = tc.sin * ta.sin;
  const double radicand = x * x + k2.factor() * y * y;
  if (radicand < -1e-12 * std::max(1.0, x * x + y * y)) {
    fail(ErrorCode::OutOfDomain, "vertices B and C are not connectable");
  }
  const double sin_a = std::sqrt(std::max(radicand, 0.0));
  const double cos_a = tb.cos * tc.cos + k1.factor() * tb.sin * tc.sin * ta.cos;

  out.b = Part::known(b);
  out.c = Part::known(c);
  out.alpha = Part::known(alpha);
  try {
    out.a = Part::known(garg(cos_a, sin_a, k1));
  } catch (const GeometryError&) {
    fail(ErrorCode::OutOfDomain, "edge a has no inverse for the given parts");
  }
  if (sin_a <= 1e-12 * std::max(1.0, std::abs(cos_a))) {
    out.beta_prime = Part::undetermined();
    out.gamma = Part::undetermined();
    return out;
  }

  const double x_prime = -tb.cos * tc.sin + tb.sin * tc.cos * ta.cos;
  const double y_prime = tb.sin * ta.sin;
  auto angle = [&](double cos_part, double sin_part, const char* name) {
    if (k2.value() != 1 && !(cos_part > 0.0 && (k2.value() == 0 || std::abs(sin_part) < cos_part))) {
      fail(ErrorCode::UnmeasurableAngle, std::string("angle ") + name + " lies outside the line sequence");
    }
    return garg(cos_part, sin_part, k2);
  };
  out.gamma = Part::known(angle(x, y, "gamma"));
  out.beta_prime = Part::known(angle(x_prime, y_prime, "beta'"));
  return out;
}

double triangle_residual(const Triangle& t, const Signature& plane) {
  require_plane(plane);
  const TypeValue k1 = plane.element(1);
  const TypeValue k2 = plane.element(2);
  const double k1f = k1.factor();
  const double k2f = k2.factor();
  const TrigValues a = gtrig(t.a.value(), k1);
  const TrigValues b = gtrig(t.b.value(), k1);
  const TrigValues c = gtrig(t.c.value(), k1);
  const TrigValues al = gtrig(t.alpha.value(), k2);
  const TrigValues be = gtrig(t.beta_prime.value(), k2);
  const TrigValues ga = gtrig(t.gamma.value(), k2);

  double worst = 0.0;
  auto check = [&](double lhs, double rhs) {
    if (all_finite({lhs, rhs})) worst = std::max(worst, relative_gap(lhs, rhs));
  };
  // Sine law, cross-multiplied.
  check(a.sin * be.sin, b.sin * al.sin);
  check(b.sin * ga.sin, c.sin * be.sin);
  // First cosine laws.
  check(a.cos, b.cos * c.cos + k1f * b.sin * c.sin * al.cos);
  check(b.cos, a.cos * c.cos - k1f * a.sin * c.sin * be.cos);
  check(c.cos, a.cos * b.cos + k1f * a.sin * b.sin * ga.cos);
  // Second cosine laws.
  check(al.cos, be.cos * ga.cos + k2f * be.sin * ga.sin * a.cos);
  check(be.cos, al.cos * ga.cos - k2f * al.sin * ga.sin * b.cos);
  check(ga.cos, al.cos * be.cos + k2f * al.sin * be.sin * c.cos);
  // Tangent forms with denominators cleared.
  const double k12 = k1f * k2f;
  auto tangent = [&](double lhs, double u, double v, double cross, double sign, double k, double sin_term) {
    // Near a tangent pole the cleared form loses every significant digit.
    constexpr double kPole = 1e6;
    if (std::abs(lhs) > kPole || std::abs(u) > kPole || std::abs(v) > kPole) return;
    const double num = u * u + v * v - 2.0 * sign * u * v * cross + k12 * u * u * v * v * sin_term * sin_term;
    const double den = 1.0 + sign * k * u * v * cross;
    check(lhs * lhs * den * den, num);
  };
  tangent(a.tan, b.tan, c.tan, al.cos, 1.0, k1f, al.sin);
  tangent(b.tan, a.tan, c.tan, be.cos, -1.0, k1f, be.sin);
  tangent(c.tan, a.tan, b.tan, ga.cos, 1.0, k1f, ga.sin);
  tangent(al.tan, be.tan, ga.tan, a.cos, 1.0, k2f, a.sin);
  tangent(be.tan, al.tan, ga.tan, b.cos, -1.0, k2f, b.sin);
  tangent(ga.tan, al.tan, be.tan, c.cos, 1.0, k2f, c.sin);
  return worst;
}

namespace {

enum Slot { SlotA, SlotB, SlotC, SlotAlpha, SlotBeta, SlotCount };

struct Factor {
  Slot slot;
  TrigFunction fn;
};

// Each right-triangle relation reads f0(x0) = f1(x1) * f2(x2).
struct Relation3 {
  Factor lhs;
  Factor first;
  Factor second;
};

constexpr TrigFunction kC = TrigFunction::Cos;
constexpr TrigFunction kS = TrigFunction::Sin;
constexpr TrigFunction kT = TrigFunction::Tan;

constexpr std::array<Relation3, 10> kRightRelations{{
    {{SlotB, kT}, {SlotC, kT}, {SlotAlpha, kC}},
    {{SlotA, kT}, {SlotC, kT}, {SlotBeta, kS}},
    {{SlotA, kS}, {SlotC, kS}, {SlotAlpha, kS}},
    {{SlotB, kS}, {SlotC, kS}, {SlotBeta, kC}},
    {{SlotA, kT}, {SlotB, kS}, {SlotAlpha, kT}},
    {{SlotA, kS}, {SlotB, kT}, {SlotBeta, kT}},
    {{SlotAlpha, kC}, {SlotA, kC}, {SlotBeta, kC}},
    {{SlotBeta, kS}, {SlotB, kC}, {SlotAlpha, kS}},
    {{SlotC, kC}, {SlotA, kC}, {SlotB, kC}},
    {{SlotBeta, kT}, {SlotC, kC}, {SlotAlpha, kT}},
}};

std::array<TypeValue, SlotCount> slot_types(const Signature& plane) {
  const TypeValue k1 = plane.element(1);
  const TypeValue k2 = plane.element(2);
  return {k1 * k2, k1, k1, k2, k2};
}

std::array<Part*, SlotCount> slots(RightTriangle& t) {
  return {&t.a, &t.b, &t.c, &t.alpha, &t.beta_prime};
}

std::array<const Part*, SlotCount> slots(const RightTriangle& t) {
  return {&t.a, &t.b, &t.c, &t.alpha, &t.beta_prime};
}

double pick(const TrigValues& v, TrigFunction fn) {
  switch (fn) {
    case TrigFunction::Cos: return v.cos;
    case TrigFunction::Sin: return v.sin;
    case TrigFunction::Tan: return v.tan;
  }
  return 0.0;
}

struct Candidates {
  std::optional<double> cos;
  std::optional<double> sin;
  std::optional<double> tan;

  void offer(TrigFunction fn, double value) {
    std::optional<double>& target = fn == kC ? cos : fn == kS ? sin : tan;
    if (!target) target = value;
  }
  bool empty() const { return !cos && !sin && !tan; }
};

// Recovers a measure from whichever trig values the relations produced.
std::optional<double> resolve(const Candidates& cand, TypeValue type) {
  switch (type.value()) {
    case 1:
      if (cand.cos && cand.sin) return std::atan2(*cand.sin, *cand.cos);
      if (cand.tan) {
        // Interior measures lie in (0, pi).
        const double angle = std::atan(*cand.tan);
        return angle < 0.0 ? angle + std::numbers::pi : angle;
      }
      if (cand.cos && std::abs(*cand.cos) <= 1.0 + 1e-12) return std::acos(std::clamp(*cand.cos, -1.0, 1.0));
      if (cand.sin && std::abs(*cand.sin) <= 1.0 + 1e-12) return std::asin(std::clamp(*cand.sin, -1.0, 1.0));
      return std::nullopt;
    case 0:
      if (cand.sin) return *cand.sin;
      if (cand.tan) return *cand.tan;
      return std::nullopt;
    default:
      if (cand.sin) return std::asinh(*cand.sin);
      if (cand.tan && std::abs(*cand.tan) < 1.0) return std::atanh(*cand.tan);
      if (cand.cos && *cand.cos >= 1.0 - 1e-12) return std::acosh(std::max(*cand.cos, 1.0));
      return std::nullopt;
  }
}

}  // namespace

RightTriangle solve_right_triangle(const RightTriangle& known, const Signature& plane) {
  require_plane(plane);
  const auto types = slot_types(plane);
  RightTriangle out = known;
  auto parts = slots(out);
  const auto known_count = std::count_if(parts.begin(), parts.end(), [](Part* p) { return p->is_known(); });
  if (known_count < 2) fail(ErrorCode::Underdetermined, "a right triangle needs two known parts");

  for (int sweep = 0; sweep < 10; ++sweep) {
    std::array<TrigValues, SlotCount> values{};
    for (int s = 0; s < SlotCount; ++s) {
      if (parts[s]->is_known()) values[s] = gtrig(parts[s]->value(), types[s]);
    }
    std::array<Candidates, SlotCount> cands{};
    auto offer = [&](const Factor& target, double value) {
      if (parts[target.slot]->is_known() || std::isnan(value)) return;
      // C carries no information on a parabolic measure.
      if (target.fn == kC && types[target.slot].is_zero()) return;
      if (std::isinf(value) && !(target.fn == kT && types[target.slot].value() == 1)) return;
      cands[target.slot].offer(target.fn, value);
    };
    for (const Relation3& rel : kRightRelations) {
      const bool k0 = parts[rel.lhs.slot]->is_known();
      const bool k1 = parts[rel.first.slot]->is_known();
      const bool k2 = parts[rel.second.slot]->is_known();
      const double v0 = k0 ? pick(values[rel.lhs.slot], rel.lhs.fn) : 0.0;
      const double v1 = k1 ? pick(values[rel.first.slot], rel.first.fn) : 0.0;
      const double v2 = k2 ? pick(values[rel.second.slot], rel.second.fn) : 0.0;
      if (!k0 && k1 && k2) offer(rel.lhs, v1 * v2);
      if (k0 && !k1 && k2 && v2 != 0.0) offer(rel.first, v0 / v2);
      if (k0 && k1 && !k2 && v1 != 0.0) offer(rel.second, v0 / v1);
    }
    bool changed = false;
    for (int s = 0; s < SlotCount; ++s) {
      if (parts[s]->is_known() || cands[s].empty()) continue;
      if (const auto value = resolve(cands[s], types[s])) {
        *parts[s] = Part::known(*value);
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (Part* p : parts) {
    if (!p->is_known()) *p = Part::undetermined();
  }
  if (right_triangle_residual(out, plane) > kRightTriangleTolerance) {
    fail(ErrorCode::Inconsistent, "right triangle parts violate the triangle relations");
  }
  return out;
}

double right_triangle_residual(const RightTriangle& t, const Signature& plane) {
  require_plane(plane);
  const auto types = slot_types(plane);
  const auto parts = slots(t);
  std::array<std::optional<TrigValues>, SlotCount> values{};
  for (int s = 0; s < SlotCount; ++s) {
    if (parts[s]->is_known()) values[s] = gtrig(parts[s]->value(), types[s]);
  }
  double worst = 0.0;
  for (const Relation3& rel : kRightRelations) {
    if (!values[rel.lhs.slot] || !values[rel.first.slot] || !values[rel.second.slot]) continue;
    const double lhs = pick(*values[rel.lhs.slot], rel.lhs.fn);
    const double rhs = pick(*values[rel.first.slot], rel.first.fn) * pick(*values[rel.second.slot], rel.second.fn);
    if (all_finite({lhs, rhs})) worst = std::max(worst, relative_gap(lhs, rhs));
  }
  const double k1 = plane.element(1).factor();
  const double k2 = plane.element(2).factor();
  if (values[SlotA] && values[SlotB] && values[SlotC]) {
    const double ta = values[SlotA]->tan;
    const double tb = values[SlotB]->tan;
    const double tc = values[SlotC]->tan;
    const double rhs = k2 * ta * ta + tb * tb + k1 * k2 * ta * ta * tb * tb;
    if (all_finite({tc, rhs})) worst = std::max(worst, relative_gap(tc * tc, rhs));
  }
  if (values[SlotA] && values[SlotAlpha] && values[SlotBeta]) {
    const double ta = values[SlotA]->tan;
    const double tal = values[SlotAlpha]->tan;
    const double tbe = values[SlotBeta]->tan;
    const double rhs = k1 * ta * ta + tbe * tbe + k1 * k2 * ta * ta * tbe * tbe;
    if (all_finite({tal, rhs})) worst = std::max(worst, relative_gap(tal * tal, rhs));
  }
  return worst;
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

InequalityProfile triangle_inequality_profile(const Signature& plane) {
  require_plane(plane);
  auto by_type = [](TypeValue k, Relation positive, Relation negative) {
    if (k.value() > 0) return positive;
    if (k.value() < 0) return negative;
    return Relation::Equal;
  };
  const TypeValue k1 = plane.element(1);
  const TypeValue k2 = plane.element(2);
  return InequalityProfile{
      by_type(k2, Relation::Greater, Relation::Less),
      by_type(k2, Relation::Less, Relation::Greater),
      by_type(k1, Relation::Greater, Relation::Less),
      by_type(k1, Relation::Less, Relation::Greater),
  };
}

AreaMeasure right_triangle_area(double a, double b, const Signature& plane) {
  require_plane(plane);
  const TypeValue k1 = plane.element(1);
  const TypeValue leg_a = k1 * plane.element(2);
  const TypeValue area_type = k1 * leg_a;
  const double half = gtan(a / 2.0, leg_a) * gtan(b / 2.0, k1);
  try {
    return AreaMeasure{2.0 * gtrig_inverse(half, TrigFunction::Tan, area_type), area_type};
  } catch (const GeometryError&) {
    fail(ErrorCode::OutOfDomain, "area half-tangent " + std::to_string(half) + " has no inverse");
  }
}

namespace {

template <typename F>
double simpson(F&& f, double lower, double upper, int steps) {
  const int n = steps % 2 == 0 ? steps : steps + 1;
  const double h = (upper - lower) / n;
  double sum = f(lower) + f(upper);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lower + i * h);
  return sum * h / 3.0;
}

}  // namespace

double area_integral_oracle(double a, double b, const Signature& plane, int steps) {
  require_plane(plane);
  if (steps < 2) fail(ErrorCode::DomainError, "quadrature needs at least two steps");
  const TypeValue k1 = plane.element(1);
  const TypeValue k2 = plane.element(2);
  const TypeValue leg_a = k1 * k2;
  const double tan_b = gtan(b, k1);
  double alpha = 0.0;
  try {
    alpha = gtrig_inverse(gtan(a, leg_a) / gsin(b, k1), TrigFunction::Tan, k2);
  } catch (const GeometryError&) {
    fail(ErrorCode::NonConvergent, "the angle at the polar vertex is unmeasurable");
  }
  constexpr int inner_steps = 64;
  auto radial = [&](double phi) {
    const double cos_phi = gcos(phi, k2);
    if (cos_phi <= 0.0) fail(ErrorCode::NonConvergent, "polar ray misses the opposite leg");
    double rho = 0.0;
    try {
      rho = gtrig_inverse(tan_b / cos_phi, TrigFunction::Tan, k1);
    } catch (const GeometryError&) {
      fail(ErrorCode::NonConvergent, "polar ray reaches the unmeasurable boundary");
    }
    return simpson([&](double r) { return gsin(r, k1); }, 0.0, rho, inner_steps);
  };
  return simpson(radial, 0.0, alpha, steps);
}

VolumeType volume_type(const Signature& sig) {
  TypeValue product = TypeValue::elliptic();
  for (int m = 1; m <= sig.dimension(); ++m) product = product * sig.cumulative(m);
  return VolumeType{sig.has_zero(), product};
}

std::string_view to_string(Separability separability) {
  switch (separability) {
    case Separability::NonSeparable: return "non-separable";
    case Separability::WeakSeparable: return "weak-separable";
    case Separability::StrongSeparable: return "strong-separable";
  }
  return "?";
}

Separability separability_class(const Signature& sig) {
  if (sig.dimension() < 1) fail(ErrorCode::DimensionMismatch, "separability needs n >= 1");
  switch (sig.element(1).value()) {
    case 1: return Separability::NonSeparable;
    case 0: return Separability::WeakSeparable;
    default: return Separability::StrongSeparable;
  }
}

}  // namespace homspace

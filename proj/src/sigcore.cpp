#include "homspace/sigcore.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "homspace/errors.hpp"

namespace homspace {

namespace {

std::atomic<double> g_tolerance{1e-9};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace

double default_tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_default_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    fail(ErrorCode::DomainError, "tolerance must be positive and finite");
  }
  g_tolerance.store(tol, std::memory_order_relaxed);
}

TypeValue TypeValue::from_int(int value) {
  if (value < -1 || value > 1) {
    fail(ErrorCode::DomainError,
         "type value must be -1, 0 or 1, got " + std::to_string(value));
  }
  return TypeValue(value);
}

TypeValue ExtendedType::finite() const {
  if (infinite_) {
    fail(ErrorCode::InconsistentSignature, "infinite pair type has no finite value");
  }
  return finite_;
}

double ExtendedType::factor() const {
  return infinite_ ? kInfinity : finite_.factor();
}

ExtendedType ExtendedType::reciprocal() const {
  if (infinite_) return ExtendedType(TypeValue::parabolic());
  if (finite_.is_zero()) return infinite();
  return *this;  // 1/1 = 1 and 1/-1 = -1
}

ExtendedType operator*(ExtendedType lhs, ExtendedType rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    const bool zero_factor = (!lhs.infinite_ && lhs.finite_.is_zero()) ||
                             (!rhs.infinite_ && rhs.finite_.is_zero());
    if (zero_factor) {
      fail(ErrorCode::InconsistentSignature, "product of zero and infinite type");
    }
    return ExtendedType::infinite();
  }
  return ExtendedType(lhs.finite_ * rhs.finite_);
}

std::string to_string(ExtendedType type) {
  if (type.is_infinite()) return "inf";
  return std::to_string(type.finite().value());
}

Signature::Signature() : Signature(std::vector<TypeValue>{}) {}

Signature::Signature(std::vector<TypeValue> elements, std::vector<double> scales)
    : elements_(std::move(elements)), scales_(std::move(scales)) {
  const int n = dimension();
  if (!scales_.empty() && static_cast<int>(scales_.size()) != n) {
    fail(ErrorCode::DimensionMismatch, "scale count must match signature length");
  }
  for (double r : scales_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      fail(ErrorCode::DomainError, "scale parameters must be positive");
    }
  }
  cumulative_.assign(static_cast<std::size_t>(n + 1), TypeValue::elliptic());
  for (int m = 1; m <= n; ++m) {
    cumulative_[static_cast<std::size_t>(m)] =
        cumulative_[static_cast<std::size_t>(m - 1)] * elements_[static_cast<std::size_t>(m - 1)];
  }
  const auto size = static_cast<std::size_t>(n + 1);
  pair_table_.assign(size * size, 1.0);
  for (int i = 0; i <= n; ++i) {
    TypeValue running = TypeValue::elliptic();
    for (int j = i + 1; j <= n; ++j) {
      running = running * elements_[static_cast<std::size_t>(j - 1)];
      const double forward = running.factor();
      pair_table_[static_cast<std::size_t>(i) * size + static_cast<std::size_t>(j)] = forward;
      pair_table_[static_cast<std::size_t>(j) * size + static_cast<std::size_t>(i)] =
          forward == 0.0 ? kInfinity : forward;
    }
  }
}

Signature Signature::from_ints(const std::vector<int>& elements) {
  std::vector<TypeValue> types;
  types.reserve(elements.size());
  for (int v : elements) types.push_back(TypeValue::from_int(v));
  return Signature(std::move(types));
}

Signature Signature::from_ints(std::initializer_list<int> elements) {
  return from_ints(std::vector<int>(elements));
}

Signature Signature::parse(std::string_view text) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::ParseError, "invalid signature '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') bad("expected '{'");
  ++pos;
  std::vector<int> values;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      int sign = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        bad("expected an integer");
      }
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1) bad("elements must be -1, 0 or 1");
        ++pos;
      }
      values.push_back(sign * value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      bad("expected ',' or '}'");
    }
  }
  skip_ws();
  if (pos != text.size()) bad("trailing characters");
  return from_ints(values);
}

void Signature::check_index(int i, const char* what) const {
  if (i < 0 || i > dimension()) {
    fail(ErrorCode::IndexOutOfRange,
         std::string(what) + " index " + std::to_string(i) + " outside 0.." +
             std::to_string(dimension()));
  }
}

TypeValue Signature::element(int m) const {
  if (m < 1 || m > dimension()) {
    fail(ErrorCode::IndexOutOfRange,
         "signature element " + std::to_string(m) + " outside 1.." + std::to_string(dimension()));
  }
  return elements_[static_cast<std::size_t>(m - 1)];
}

TypeValue Signature::cumulative(int m) const {
  check_index(m, "cumulative type");
  return cumulative_[static_cast<std::size_t>(m)];
}

ExtendedType Signature::pair(int i, int j) const {
  check_index(i, "pair type");
  check_index(j, "pair type");
  const double value = pair_factor(i, j);
  if (std::isinf(value)) return ExtendedType::infinite();
  return ExtendedType(TypeValue::from_int(static_cast<int>(value)));
}

double Signature::scale(int m) const {
  if (m < 1 || m > dimension()) {
    fail(ErrorCode::IndexOutOfRange, "scale index " + std::to_string(m) + " out of range");
  }
  return scales_.empty() ? 1.0 : scales_[static_cast<std::size_t>(m - 1)];
}

bool Signature::has_zero() const {
  for (TypeValue k : elements_) {
    if (k.is_zero()) return true;
  }
  return false;
}

std::vector<int> Signature::to_ints() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (TypeValue k : elements_) out.push_back(k.value());
  return out;
}

std::string Signature::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i].value());
  }
  out += '}';
  return out;
}

Signature Signature::reversed() const {
  std::vector<TypeValue> flipped(elements_.rbegin(), elements_.rend());
  std::vector<double> scales(scales_.rbegin(), scales_.rend());
  return Signature(std::move(flipped), std::move(scales));
}

TypeValue cumulative_type(const Signature& sig, int m) { return sig.cumulative(m); }

ExtendedType pair_type(const Signature& sig, int i, int j) { return sig.pair(i, j); }

TrigValues gtrig(double phi, TypeValue k, double scale) {
  const double x = phi / scale;
  TrigValues out;
  switch (k.value()) {
    case 1:
      out.cos = std::cos(x);
      out.sin = std::sin(x);
      break;
    case 0:
      out.cos = 1.0;
      out.sin = x;
      break;
    default:
      out.cos = std::cosh(x);
      out.sin = std::sinh(x);
      break;
  }
  out.tan = out.cos == 0.0 ? std::copysign(kInfinity, out.sin) : out.sin / out.cos;
  return out;
}

double gcos(double phi, TypeValue k) { return gtrig(phi, k).cos; }
double gsin(double phi, TypeValue k) { return gtrig(phi, k).sin; }
double gtan(double phi, TypeValue k) { return gtrig(phi, k).tan; }

double gtrig_inverse(double x, TrigFunction which, TypeValue k) {
  constexpr double slack = 1e-12;
  auto out_of_range = [&](const char* name) {
    fail(ErrorCode::DomainError,
         std::string(name) + "^-1 of " + std::to_string(x) + " outside its range for k = " +
             std::to_string(k.value()));
  };
  if (!std::isfinite(x) && !(which == TrigFunction::Tan && k.value() == 1)) {
    fail(ErrorCode::DomainError, "non-finite argument");
  }
  switch (k.value()) {
    case 1:
      switch (which) {
        case TrigFunction::Cos:
          if (std::abs(x) > 1.0 + slack) out_of_range("C");
          return std::acos(std::clamp(x, -1.0, 1.0));
        case TrigFunction::Sin:
          if (std::abs(x) > 1.0 + slack) out_of_range("S");
          return std::asin(std::clamp(x, -1.0, 1.0));
        case TrigFunction::Tan:
          return std::atan(x);
      }
      break;
    case 0:
      if (which == TrigFunction::Cos) {
        fail(ErrorCode::Undetermined, "C^-1 is undetermined for k = 0 (C is identically 1)");
      }
      return x;
    default:
      switch (which) {
        case TrigFunction::Cos:
          if (x < 1.0 - slack) out_of_range("C");
          return std::acosh(std::max(x, 1.0));
        case TrigFunction::Sin:
          return std::asinh(x);
        case TrigFunction::Tan:
          if (std::abs(x) >= 1.0) out_of_range("T");
          return std::atanh(x);
      }
      break;
  }
  fail(ErrorCode::DomainError, "unreachable trig selector");
}

double garg(double c, double s, TypeValue k) {
  switch (k.value()) {
    case 1:
      return std::atan2(s, c);
    case 0:
      if (c == 0.0) fail(ErrorCode::DomainError, "parabolic argument with zero cosine");
      return s / c;
    default:
      if (!(std::abs(s) < std::abs(c))) {
        fail(ErrorCode::DomainError, "hyperbolic argument requires |S| < |C|");
      }
      return std::atanh(s / c);
  }
}

TrigValues gtrig_series(double phi, TypeValue k, int terms) {
  const double neg_k = -k.factor();
  double c_term = 1.0;
  double s_term = phi;
  TrigValues out{0.0, 0.0, 0.0};
  for (int n = 0; n < terms; ++n) {
    out.cos += c_term;
    out.sin += s_term;
    const double a = 2.0 * n + 1.0;
    const double b = 2.0 * n + 2.0;
    c_term *= neg_k * phi * phi / (a * b);
    s_term *= neg_k * phi * phi / (b * (b + 1.0));
  }
  out.tan = out.cos == 0.0 ? std::copysign(kInfinity, out.sin) : out.sin / out.cos;
  return out;
}

}  // namespace homspace

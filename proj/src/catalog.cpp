#include "homspace/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

#include "homspace/errors.hpp"

namespace homspace {

namespace {

struct Family {
  const char* name;
  std::vector<int> prefix;
  int default_dimension;
  const char* notes;
};

const std::vector<Family>& families() {
  static const std::vector<Family> table{
      {"elliptic", {1}, 2, "constant positive curvature"},
      {"euclidean", {0}, 2, "flat, elliptic angles"},
      {"hyperbolic", {-1}, 2, "constant negative curvature"},
      {"galilean", {0, 0}, 2, "flat with parabolic angles"},
      {"galilean-positive", {1, 0}, 2, "positively curved Galilean"},
      {"galilean-negative", {-1, 0}, 2, "negatively curved Galilean"},
      {"minkowski", {0, -1}, 4, "flat space-time, coordinate 1 is time"},
      {"desitter", {-1, -1}, 4, "negatively curved space-time"},
      {"antidesitter", {1, -1}, 4, "positively curved space-time"},
      {"galilean-spacetime", {0, 0}, 4, "flat space-time with absolute time"},
  };
  return table;
}

Signature family_signature(const Family& family, int dimension) {
  const int prefix = static_cast<int>(family.prefix.size());
  if (dimension < prefix) {
    fail(ErrorCode::DimensionMismatch, std::string(family.name) + " needs dimension at least " +
                                           std::to_string(prefix));
  }
  std::vector<int> elements = family.prefix;
  elements.resize(static_cast<std::size_t>(dimension), 1);
  return Signature::from_ints(elements);
}

Motion checked(const Matrix& m, const Signature& sig) { return Motion(m, sig); }

double c_inverse(double x, TypeValue k) {
  return gtrig_inverse(x, TrigFunction::Cos, k);
}

struct TilingTriangle {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Sides of the fundamental right triangle, measured with type k.
TilingTriangle tiling_triangle(int p, int q, TypeValue k) {
  const double pi = std::numbers::pi;
  const double sp = std::sin(pi / p);
  const double sq = std::sin(pi / q);
  const double cp = std::cos(pi / p);
  const double cq = std::cos(pi / q);
  return TilingTriangle{c_inverse(cq / sp, k), c_inverse(cp / sq, k), c_inverse((cp / sp) * (cq / sq), k)};
}

double parity_step(int p, int q, const TilingTriangle& tri) {
  if (q % 2 == 0) return tri.b;
  if (p % 2 == 0) return tri.b + tri.c;
  return tri.a + tri.b + tri.c;
}

void require_pq(int p, int q) {
  if (p < 3 || q < 3) fail(ErrorCode::InvalidParams, "tilings need p, q >= 3");
}

std::vector<std::pair<std::string, double>> pq_params(int p, int q) {
  return {{"p", static_cast<double>(p)}, {"q", static_cast<double>(q)}};
}

MVector plane_seed() { return coordinate_vector(3, 0); }

}  // namespace

const std::vector<NamedSpace>& named_spaces() {
  static const std::vector<NamedSpace> registry = [] {
    std::vector<NamedSpace> out;
    for (const Family& f : families()) {
      out.push_back(NamedSpace{f.name, family_signature(f, f.default_dimension), f.notes});
    }
    return out;
  }();
  return registry;
}

Signature resolve_space(const std::string& text) {
  if (!text.empty() && text.front() == '{') return Signature::parse(text);
  std::string name = text;
  std::optional<int> dimension;
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string digits = name.substr(colon + 1);
    name.resize(colon);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      fail(ErrorCode::ParseError, "bad dimension suffix in '" + text + "'");
    }
    dimension = std::stoi(digits);
  } else {
    std::size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    if (cut < name.size()) {
      dimension = std::stoi(name.substr(cut));
      name.resize(cut);
    }
  }
  for (const Family& f : families()) {
    if (name == f.name) return family_signature(f, dimension.value_or(f.default_dimension));
  }
  fail(ErrorCode::ParseError, "unknown space '" + text + "'");
}

FormSignature signature_from_form(const std::vector<int>& coeffs, TypeValue curvature, bool reorder) {
  if (std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c < -1 || c > 1; })) {
    fail(ErrorCode::MalformedForm, "form coefficients must be +1, -1 or 0");
  }
  FormSignature out;
  std::vector<int> form = coeffs;
  const bool leading_ok = !form.empty() && form.front() == 1;
  const auto first_zero = std::find(form.begin(), form.end(), 0);
  const bool zeros_trailing = std::all_of(first_zero, form.end(), [](int c) { return c == 0; });
  if (!leading_ok || !zeros_trailing) {
    if (!reorder) fail(ErrorCode::MalformedForm, "form must start with +1 and end with its zeros");
    const auto positive = std::find(form.begin(), form.end(), 1);
    if (positive == form.end()) fail(ErrorCode::MalformedForm, "form has no positive coefficient");
    std::rotate(form.begin(), positive, positive + 1);
    std::stable_partition(form.begin(), form.end(), [](int c) { return c != 0; });
    out.reordered = true;
  }
  std::vector<TypeValue> elements{curvature};
  for (std::size_t i = 1; i < form.size(); ++i) {
    if (form[i - 1] == 0 && form[i] == 0) {
      out.ambiguous.push_back(static_cast<int>(i) + 1);
      elements.push_back(TypeValue::elliptic());
    } else {
      elements.push_back(TypeValue::from_int(form[i] * form[i - 1]));
    }
  }
  out.sig = Signature(std::move(elements));
  return out;
}

double form_interval(const std::vector<int>& coeffs, const MVector& x, const MVector& y) {
  if (x.size() != static_cast<Eigen::Index>(coeffs.size()) || y.size() != x.size()) {
    fail(ErrorCode::DimensionMismatch, "form and vectors differ in size");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double d = x(static_cast<Eigen::Index>(i)) - y(static_cast<Eigen::Index>(i));
    sum += coeffs[i] * d * d;
  }
  return sum;
}

Signature metaspace_signature(const Signature& sig) {
  std::vector<TypeValue> elements{TypeValue::parabolic()};
  elements.insert(elements.end(), sig.elements().begin(), sig.elements().end());
  return Signature(std::move(elements));
}

Signature tangent_signature(const Signature& sig) {
  std::vector<TypeValue> elements = sig.elements();
  if (!elements.empty()) elements.front() = TypeValue::parabolic();
  return Signature(std::move(elements));
}

int tiling_curvature(int p, int q) {
  require_pq(p, q);
  const int product = (p - 2) * (q - 2);
  return product < 4 ? 1 : product == 4 ? 0 : -1;
}

CrystalGroup tiling_group(int p, int q, double euclidean_step) {
  const TypeValue k1 = TypeValue::from_int(tiling_curvature(p, q));
  const Signature sig = Signature::from_ints({k1.value(), 1});
  double step = euclidean_step;
  if (!k1.is_zero()) step = parity_step(p, q, tiling_triangle(p, q, k1));
  CrystalGroup out{sig, {}, {"T", "R"}, pq_params(p, q), plane_seed(), std::nullopt};
  out.params.emplace_back("d", step);
  out.generators.push_back(checked(main_rotation(1, 2.0 * step, sig).matrix(), sig));
  out.generators.push_back(checked(main_rotation(2, 2.0 * std::numbers::pi / q, sig).matrix(), sig));
  return out;
}

CrystalGroup dual_tiling_group(int p, int q, double parabolic_step) {
  const TypeValue k2 = TypeValue::from_int(tiling_curvature(p, q));
  const Signature sig = Signature::from_ints({1, k2.value()});
  double phi = parabolic_step;
  if (!k2.is_zero()) phi = parity_step(p, q, tiling_triangle(p, q, k2));
  CrystalGroup out{sig, {}, {"T", "R"}, pq_params(p, q), plane_seed(), std::nullopt};
  out.params.emplace_back("phi", phi);
  out.generators.push_back(checked(main_rotation(1, 2.0 * std::numbers::pi / q, sig).matrix(), sig));
  out.generators.push_back(checked(main_rotation(2, 2.0 * phi, sig).matrix(), sig));
  return out;
}

CrystalGroup linear_plane_group(LinearPlane kind, const LinearPlaneParams& params) {
  if (!(params.a > 0.0)) fail(ErrorCode::InvalidParams, "lattice step a must be positive");
  if (kind == LinearPlane::Galilean) {
    const Signature sig = Signature::from_ints({0, 0});
    CrystalGroup out{sig, {}, {"T", "R"}, {{"a", params.a}, {"b", params.b}}, plane_seed(), std::nullopt};
    out.generators.push_back(checked(main_rotation(1, params.a, sig).matrix(), sig));
    out.generators.push_back(checked(main_rotation(2, params.b / params.a, sig).matrix(), sig));
    return out;
  }
  if (params.u < 2) fail(ErrorCode::InvalidParams, "boost parameter u must be an integer >= 2");
  const Signature sig = Signature::from_ints({0, -1});
  const double u = params.u;
  const double ratio = params.plus ? std::sqrt((u + 1.0) / (u - 1.0)) : std::sqrt((u - 1.0) / (u + 1.0));
  const double phi = std::acosh(u);
  CrystalGroup out{sig, {}, {"T", "R"}, {{"a", params.a}, {"u", u}, {"b", params.a * ratio}, {"phi", phi}},
                   plane_seed(), std::nullopt};
  out.generators.push_back(checked(main_rotation(1, params.a, sig).matrix(), sig));
  out.generators.push_back(checked(main_rotation(2, phi, sig).matrix(), sig));
  // Images of P = (1 : a : 0) and Q = (1 : 0 : b) have lattice coordinates
  // (u, v) and (r, t).
  const long v = params.plus ? params.u - 1 : params.u + 1;
  const long r = params.plus ? params.u + 1 : params.u - 1;
  out.lattice = LatticeIntegers{params.u, v, r, params.u};
  return out;
}

CrystalGroup curved_galilean_group(int u, bool plus) {
  if (u < 2) fail(ErrorCode::InvalidParams, "boost parameter u must be an integer >= 2");
  const Signature sig = Signature::from_ints({-1, 0});
  const double uf = u;
  const double d = std::acosh(uf);
  const double phi = plus ? std::sqrt((uf + 1.0) / (uf - 1.0)) : std::sqrt((uf - 1.0) / (uf + 1.0));
  CrystalGroup out{sig, {}, {"T", "R"}, {{"u", uf}, {"d", d}, {"phi", phi}}, plane_seed(), std::nullopt};
  out.generators.push_back(checked(main_rotation(1, d, sig).matrix(), sig));
  out.generators.push_back(checked(main_rotation(2, phi, sig).matrix(), sig));
  return out;
}

CrystalGroup curved_minkowski_group(int p, int q) {
  if (tiling_curvature(p, q) != -1) {
    fail(ErrorCode::InvalidParams, "the {-1,-1} group needs a hyperbolic (p, q)");
  }
  if (q % 2 != 0) fail(ErrorCode::Unsupported, "the {-1,-1} group is built for even q only");
  const Signature sig = Signature::from_ints({-1, -1});
  const TilingTriangle tri = tiling_triangle(p, q, TypeValue::hyperbolic());
  const double phi = q % 4 == 0 ? tri.b : tri.a + tri.c;
  CrystalGroup out{sig, {}, {"T", "R"}, pq_params(p, q), plane_seed(), std::nullopt};
  out.params.emplace_back("d", tri.b);
  out.params.emplace_back("phi", phi);
  out.generators.push_back(checked(main_rotation(1, 2.0 * tri.b, sig).matrix(), sig));
  out.generators.push_back(checked(main_rotation(2, 2.0 * phi, sig).matrix(), sig));
  return out;
}

Matrix anti_transpose(const Matrix& m) {
  const Eigen::Index last = m.rows() - 1;
  Matrix out(m.cols(), m.rows());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = m(last - c, last - r);
  }
  return out;
}

Motion dual_transform(const Motion& motion) {
  return Motion::trusted(anti_transpose(inverse(motion).matrix()), motion.signature().reversed());
}

std::optional<double> point_distance(const MVector& x, const MVector& y, const Signature& sig, double tol) {
  check_size(x, sig);
  check_size(y, sig);
  if (sig.dimension() == 0) return 0.0;
  if (x(0) == 0.0 || y(0) == 0.0) return std::nullopt;
  const MVector xn = x / x(0);
  const MVector yn = y / y(0);
  const TypeValue k1 = sig.element(1);
  if (k1.is_zero()) {
    const MVector diff = xn - yn;
    if (diff.lpNorm<Eigen::Infinity>() <= tol) return 0.0;
    double square = 0.0;
    for (int j = 1; j <= sig.dimension(); ++j) {
      const double factor = sig.pair_factor(1, j);
      if (std::isinf(factor)) {
        if (std::abs(diff(j)) > tol) return std::nullopt;
        continue;
      }
      square += factor * diff(j) * diff(j);
    }
    if (square <= tol * tol) return std::nullopt;
    return std::sqrt(square);
  }
  // Points normalised to x0 = 1 have meta square 1 / x0^2 before scaling.
  const double nx = meta_product(xn, xn, sig);
  const double ny = meta_product(yn, yn, sig);
  if (nx <= 0.0 || ny <= 0.0) return std::nullopt;
  const double cos_d = meta_product(xn, yn, sig) / std::sqrt(nx * ny);
  if (k1.value() == 1) return std::acos(std::min(1.0, std::abs(cos_d)));
  if (std::abs(cos_d) < 1.0 - tol) return std::nullopt;
  return std::acosh(std::max(1.0, std::abs(cos_d)));
}

namespace {

bool same_matrix(const Matrix& lhs, const Matrix& rhs, double tol) {
  return (lhs - rhs).lpNorm<Eigen::Infinity>() <= tol * std::max(1.0, lhs.lpNorm<Eigen::Infinity>());
}

// Points are compared by direction: scaled to unit max-norm and sign-fixed.
MVector hash_form(const MVector& x) {
  return canonical_point(x / x.lpNorm<Eigen::Infinity>());
}

class PointIndex {
 public:
  explicit PointIndex(double cell) : cell_(cell) {}

  std::optional<int> find(const MVector& key) const {
    const Cell base = cell_of(key);
    std::optional<int> hit;
    visit_neighbours(base, 0, base, [&](const Cell& cell) {
      if (hit) return;
      const auto it = cells_.find(cell);
      if (it == cells_.end()) return;
      for (int id : it->second) {
        if ((keys_[static_cast<std::size_t>(id)] - key).lpNorm<Eigen::Infinity>() <= cell_) {
          hit = id;
          return;
        }
      }
    });
    return hit;
  }

  int insert(const MVector& key) {
    const int id = static_cast<int>(keys_.size());
    keys_.push_back(key);
    cells_[cell_of(key)].push_back(id);
    return id;
  }

 private:
  using Cell = std::vector<long long>;
  struct CellHash {
    std::size_t operator()(const Cell& cell) const {
      std::size_t h = 1469598103934665603ULL;
      for (long long v : cell) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
      return h;
    }
  };

  Cell cell_of(const MVector& key) const {
    Cell out(static_cast<std::size_t>(key.size()));
    for (Eigen::Index i = 0; i < key.size(); ++i) {
      out[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(key(i) / cell_));
    }
    return out;
  }

  template <typename F>
  void visit_neighbours(const Cell& base, std::size_t axis, Cell current, F&& f) const {
    if (axis == base.size()) {
      f(current);
      return;
    }
    for (long long offset = -1; offset <= 1; ++offset) {
      current[axis] = base[axis] + offset;
      visit_neighbours(base, axis + 1, current, f);
    }
  }

  double cell_;
  std::vector<MVector> keys_;
  std::unordered_map<Cell, std::vector<int>, CellHash> cells_;
};

}  // namespace

Orbit orbit(const CrystalGroup& group, int depth, double tol, std::size_t node_cap) {
  if (depth < 0) fail(ErrorCode::InvalidParams, "orbit depth must be non-negative");
  const Signature& sig = group.plane_sig;
  const MVector seed_key = hash_form(group.lattice_seed);

  std::vector<Motion> letters;
  for (const Motion& g : group.generators) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  std::vector<Motion> fixing;
  std::vector<Motion> moving;
  for (const Motion& letter : letters) {
    const bool fixes = (hash_form(letter.apply(group.lattice_seed)) - seed_key).lpNorm<Eigen::Infinity>() <= tol;
    (fixes ? fixing : moving).push_back(letter);
  }

  // Stabilizer words: the full closure when it is small, otherwise words of
  // bounded length.
  constexpr std::size_t kFiniteStabilizer = 64;
  std::vector<Motion> stabilizer{Motion::identity(sig)};
  std::vector<Motion> frontier = stabilizer;
  for (std::size_t length = 0; !frontier.empty() && stabilizer.size() <= kFiniteStabilizer; ++length) {
    if (length >= kFiniteStabilizer) break;
    std::vector<Motion> next;
    for (const Motion& word : frontier) {
      for (const Motion& letter : fixing) {
        Motion candidate = compose(word, letter);
        const bool seen = std::any_of(stabilizer.begin(), stabilizer.end(), [&](const Motion& m) {
          return same_matrix(m.matrix(), candidate.matrix(), 1e-9);
        });
        if (!seen) {
          stabilizer.push_back(candidate);
          next.push_back(std::move(candidate));
        }
      }
    }
    frontier = std::move(next);
  }
  if (stabilizer.size() > kFiniteStabilizer) {
    stabilizer.assign(1, Motion::identity(sig));
    frontier = stabilizer;
    for (int length = 0; length < depth; ++length) {
      std::vector<Motion> next;
      for (const Motion& word : frontier) {
        for (const Motion& letter : fixing) next.push_back(compose(word, letter));
      }
      stabilizer.insert(stabilizer.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  Orbit out;
  PointIndex index(tol);
  out.nodes.push_back(canonical_point(group.lattice_seed));
  index.insert(seed_key);
  std::set<std::pair<int, int>> edges;
  std::vector<std::pair<Motion, int>> level{{Motion::identity(sig), 0}};
  for (int step = 0; step < depth && !level.empty(); ++step) {
    std::vector<std::pair<Motion, int>> next;
    for (const auto& [word, node] : level) {
      for (const Motion& h : stabilizer) {
        const Motion base = compose(word, h);
        for (const Motion& t : moving) {
          Motion candidate = compose(base, t);
          const MVector point = candidate.apply(group.lattice_seed);
          const MVector key = hash_form(point);
          int target = 0;
          if (const auto found = index.find(key)) {
            target = *found;
          } else {
            if (out.nodes.size() >= node_cap) {
              fail(ErrorCode::OrbitExplosion, "orbit exceeds " + std::to_string(node_cap) + " nodes");
            }
            target = index.insert(key);
            out.nodes.push_back(canonical_point(point));
            next.emplace_back(std::move(candidate), target);
          }
          if (target != node) edges.emplace(std::min(node, target), std::max(node, target));
        }
      }
    }
    level = std::move(next);
  }
  out.edges.assign(edges.begin(), edges.end());

  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.nodes.size(); ++j) {
      const auto d = point_distance(out.nodes[i], out.nodes[j], sig);
      if (d && (!out.min_distance || *d < *out.min_distance)) out.min_distance = d;
    }
  }
  return out;
}

}  // namespace homspace

#pragma once

// Upper half-plane model: points, Moebius maps, isometry classes, distances
// and the geodesic/circle conversions used throughout the library.

#include "teich/number.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace teich {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point of the closed upper half-plane: interior, on the real axis, or at
/// infinity.
class UhpPoint {
 public:
  enum class Kind { Interior, Boundary, Infinity };

  static UhpPoint interior(double x, double y) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
      throw DomainError("interior point needs finite x and y > 0");
    return UhpPoint(Kind::Interior, x, y);
  }
  static UhpPoint interior(std::complex<double> z) { return interior(z.real(), z.imag()); }
  static UhpPoint boundary(double x) {
    if (!std::isfinite(x)) throw DomainError("boundary point must be finite; use infinity()");
    return UhpPoint(Kind::Boundary, x, 0.0);
  }
  static UhpPoint infinity() { return UhpPoint(Kind::Infinity, 0.0, 0.0); }

  Kind kind() const { return kind_; }
  bool is_interior() const { return kind_ == Kind::Interior; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> as_complex() const { return {x_, y_}; }

  friend bool operator==(const UhpPoint&, const UhpPoint&) = default;

 private:
  UhpPoint(Kind k, double x, double y) : kind_(k), x_(x), y_(y) {}
  Kind kind_;
  double x_;
  double y_;
};

inline std::string to_string(const UhpPoint& p) {
  switch (p.kind()) {
    case UhpPoint::Kind::Infinity: return "inf";
    case UhpPoint::Kind::Boundary: return std::to_string(p.x());
    default: return std::to_string(p.x()) + "+" + std::to_string(p.y()) + "i";
  }
}

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Identity: return "identity";
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    default: return "hyperbolic";
  }
}

namespace detail {
template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
double as_double(const T& v) {
  if constexpr (is_exact_v<T>) return to_double(v);
  else return static_cast<double>(v);
}

inline constexpr double kFloatTol = 1e-12;
}  // namespace detail

/// Element of PSL(2,R). The stored representative has its first nonzero
/// entry positive, so a matrix and its negative compare equal.
template <class T = double>
class MoebiusMap {
 public:
  MoebiusMap(T a, T b, T c, T d) : a_(a), b_(b), c_(c), d_(d) {
    const T det = a_ * d_ - b_ * c_;
    if constexpr (detail::is_exact_v<T>) {
      if (det != T(1)) throw DomainError("Moebius map must have determinant one");
    } else {
      const double scale = std::max(1.0, std::abs(a_ * d_) + std::abs(b_ * c_));
      if (!(std::abs(det - 1.0) <= detail::kFloatTol * scale))
        throw DomainError("Moebius map must have determinant one");
    }
    canonicalize();
  }

  /// Rescales a real matrix of positive determinant onto SL(2,R).
  static MoebiusMap from_gl2(double a, double b, double c, double d)
    requires std::is_same_v<T, double>
  {
    const double det = a * d - b * c;
    if (!(det > 0.0)) throw DomainError("matrix needs positive determinant");
    const double s = 1.0 / std::sqrt(det);
    return MoebiusMap(a * s, b * s, c * s, d * s);
  }

  static MoebiusMap identity() { return MoebiusMap(T(1), T(0), T(0), T(1)); }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }
  T trace() const { return a_ + d_; }

  MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

  friend MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y) {
    return MoebiusMap(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                      x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
  }

  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  MoebiusMap<double> to_double_map() const
    requires detail::is_exact_v<T>
  {
    return MoebiusMap<double>::from_gl2(detail::as_double(a_), detail::as_double(b_),
                                        detail::as_double(c_), detail::as_double(d_));
  }

 private:
  void canonicalize() {
    const T zero(0);
    const T& lead = a_ != zero ? a_ : (b_ != zero ? b_ : (c_ != zero ? c_ : d_));
    if (lead < zero) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
  }

  T a_, b_, c_, d_;
};

/// z -> (az+b)/(cz+d), with the usual limit rules at infinity.
template <class T>
UhpPoint apply(const MoebiusMap<T>& m, const UhpPoint& z) {
  const double a = detail::as_double(m.a()), b = detail::as_double(m.b());
  const double c = detail::as_double(m.c()), d = detail::as_double(m.d());
  switch (z.kind()) {
    case UhpPoint::Kind::Infinity:
      if (m.c() == T(0)) return UhpPoint::infinity();
      return UhpPoint::boundary(a / c);
    case UhpPoint::Kind::Boundary: {
      const double den = c * z.x() + d;
      if (den == 0.0) return UhpPoint::infinity();
      return UhpPoint::boundary((a * z.x() + b) / den);
    }
    default: {
      const std::complex<double> w = z.as_complex();
      const std::complex<double> r = (a * w + b) / (c * w + d);
      // Im r = Im z / |cz+d|^2 exactly; recompute to keep it positive.
      return UhpPoint::interior(r.real(), z.y() / std::norm(c * w + d));
    }
  }
}

template <class T>
IsometryKind classify(const MoebiusMap<T>& m) {
  const T zero(0), one(1);
  const T tr = m.trace();
  if constexpr (detail::is_exact_v<T>) {
    if (m.b() == zero && m.c() == zero && m.a() == one && m.d() == one) return IsometryKind::Identity;
    const T disc = tr * tr - T(4);
    if (disc > zero) return IsometryKind::Hyperbolic;
    if (disc == zero) return IsometryKind::Parabolic;
    return IsometryKind::Elliptic;
  } else {
    const double tol = detail::kFloatTol;
    if (std::abs(m.b()) <= tol && std::abs(m.c()) <= tol && std::abs(m.a() - 1.0) <= tol &&
        std::abs(m.d() - 1.0) <= tol)
      return IsometryKind::Identity;
    const double disc = tr * tr - 4.0;
    if (disc > tol) return IsometryKind::Hyperbolic;
    if (disc >= -tol) return IsometryKind::Parabolic;
    return IsometryKind::Elliptic;
  }
}

/// Fixed points on the absolute. For c = 0 the first point is infinity.
template <class T>
std::pair<UhpPoint, UhpPoint> fixed_points(const MoebiusMap<T>& m) {
  const IsometryKind kind = classify(m);
  if (kind == IsometryKind::Elliptic || kind == IsometryKind::Identity)
    throw DomainError(std::string("fixed points are not isolated on the absolute for an ") +
                      to_string(kind) + " map");
  const double a = detail::as_double(m.a()), b = detail::as_double(m.b());
  const double c = detail::as_double(m.c()), d = detail::as_double(m.d());
  if (m.c() == T(0)) {
    if (kind == IsometryKind::Parabolic) return {UhpPoint::infinity(), UhpPoint::infinity()};
    return {UhpPoint::infinity(), UhpPoint::boundary(b / (d - a))};
  }
  const double tr = a + d;
  const double root = kind == IsometryKind::Parabolic ? 0.0 : std::sqrt(tr * tr - 4.0);
  return {UhpPoint::boundary((a - d - root) / (2.0 * c)),
          UhpPoint::boundary((a - d + root) / (2.0 * c))};
}

/// Length l of the invariant axis, with |Tr m| = 2 cosh(l/2).
template <class T>
double translation_length(const MoebiusMap<T>& m) {
  if (classify(m) != IsometryKind::Hyperbolic)
    throw DomainError("translation length is defined for hyperbolic maps only");
  return 2.0 * std::acosh(std::abs(detail::as_double(m.trace())) / 2.0);
}

inline double distance(const UhpPoint& z, const UhpPoint& w) {
  if (!z.is_interior() || !w.is_interior())
    throw DomainError("distance to a point of the absolute is infinite");
  const std::complex<double> zc = z.as_complex(), wc = w.as_complex();
  const double far = std::abs(zc - std::conj(wc));
  const double near = std::abs(zc - wc);
  return std::log((far + near) / (far - near));
}

/// A complete geodesic: a vertical half-line or a semicircle orthogonal to R.
struct GeodesicArc {
  bool vertical = false;
  double x = 0.0;       // vertical: foot of the half-line
  double center = 0.0;  // semicircle
  double radius = 0.0;

  /// Signed residual of p against the arc; zero when p lies on it.
  double residual(const UhpPoint& p) const {
    if (p.is_infinity()) return vertical ? 0.0 : HUGE_VAL;
    if (vertical) return p.x() - x;
    return std::hypot(p.x() - center, p.y()) - radius;
  }
};

inline GeodesicArc geodesic_through(const UhpPoint& z, const UhpPoint& w) {
  if (z == w) throw DomainError("geodesic through a single point is not unique");
  if (z.is_infinity() || w.is_infinity()) {
    const UhpPoint& other = z.is_infinity() ? w : z;
    return {.vertical = true, .x = other.x()};
  }
  const double dx = z.x() - w.x();
  const double scale = std::max({1.0, std::abs(z.x()), std::abs(w.x())});
  if (std::abs(dx) <= 1e-15 * scale) {
    if (!z.is_interior() && !w.is_interior())
      throw DomainError("two distinct points of the absolute cannot share an x coordinate");
    return {.vertical = true, .x = 0.5 * (z.x() + w.x())};
  }
  const double center = (std::norm(z.as_complex()) - std::norm(w.as_complex())) / (2.0 * dx);
  return {.vertical = false, .center = center, .radius = std::hypot(z.x() - center, z.y())};
}

struct EuclideanCircle {
  UhpPoint center;
  double radius;
};

/// The hyperbolic circle of the given center and radius, as a Euclidean circle.
inline EuclideanCircle hyperbolic_circle(const UhpPoint& center, double radius) {
  if (!center.is_interior()) throw DomainError("circle center must be an interior point");
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  return {UhpPoint::interior(center.x(), center.y() * std::cosh(radius)),
          center.y() * std::sinh(radius)};
}

}  // namespace teich

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "coseg/errors.hpp"
#include "coseg/rational.hpp"

namespace coseg {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& k, const Point& a) { return {k * a.x, k * a.y}; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x.str() << ", " << p.y.str() << ')';
  }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Closed segment between two distinct points.
class Segment {
 public:
  Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_) throw InvalidArgument("segment endpoints coincide");
  }
  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  Point direction() const { return b_ - a_; }
  Point at(const Rational& t) const { return a_ + t * direction(); }
  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

// {start + rho * (through - start) : rho >= 0}
class Ray {
 public:
  Ray(Point start, Point through) : start_(std::move(start)), through_(std::move(through)) {
    if (start_ == through_) throw InvalidArgument("ray start coincides with its through point");
  }
  const Point& start() const { return start_; }
  const Point& through() const { return through_; }
  Point direction() const { return through_ - start_; }
  Point at(const Rational& rho) const { return start_ + rho * direction(); }
  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Point start_;
  Point through_;
};

enum class RelationTag { disjoint, cross, touch, overlap };

inline const char* to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::disjoint: return "disjoint";
    case RelationTag::cross: return "cross";
    case RelationTag::touch: return "touch";
    case RelationTag::overlap: return "overlap";
  }
  return "?";
}

// Classification of the intersection of two linear objects. cross/touch carry
// the single common point.
struct Relation {
  RelationTag tag = RelationTag::disjoint;
  std::optional<Point> witness;

  static Relation disjoint() { return {RelationTag::disjoint, std::nullopt}; }
  static Relation overlap() { return {RelationTag::overlap, std::nullopt}; }
  static Relation cross(Point p) { return {RelationTag::cross, std::move(p)}; }
  static Relation touch(Point p) { return {RelationTag::touch, std::move(p)}; }

  bool intersects() const { return tag != RelationTag::disjoint; }
};

// Sign of (b - a) x (c - a).
inline int orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

// Intersection of the supporting lines p1p2 and p3p4; nullopt when parallel or coincident.
inline std::optional<Point> line_intersection(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  Point d1 = p2 - p1;
  Point d2 = p4 - p3;
  Rational denom = cross(d1, d2);
  if (denom.is_zero()) return std::nullopt;
  Rational t = cross(p3 - p1, d2) / denom;
  return p1 + t * d1;
}

// Point membership, all exact.
inline bool on_segment(const Point& q, const Segment& s) {
  if (orient(s.a(), s.b(), q) != 0) return false;
  Point d = s.direction();
  Rational t = dot(q - s.a(), d);
  return t.sign() >= 0 && t <= dot(d, d);
}

inline bool is_endpoint(const Point& q, const Segment& s) { return q == s.a() || q == s.b(); }

inline bool in_interior(const Point& q, const Segment& s) { return on_segment(q, s) && !is_endpoint(q, s); }

inline bool on_ray(const Point& q, const Ray& r) {
  return orient(r.start(), r.through(), q) == 0 && dot(q - r.start(), r.direction()).sign() >= 0;
}

namespace detail {

// Collinear case: the common part of two collinear objects, expressed in the
// parameter of `dir` measured from `origin`. Each object is [lo, hi] where an
// absent bound means unbounded.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

inline Relation classify_collinear(const Point& origin, const Point& dir, const Interval& a, const Interval& b) {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  if (a.lo && b.lo) lo = max(*a.lo, *b.lo);
  else lo = a.lo ? a.lo : b.lo;
  if (a.hi && b.hi) hi = min(*a.hi, *b.hi);
  else hi = a.hi ? a.hi : b.hi;
  if (lo && hi) {
    if (*lo > *hi) return Relation::disjoint();
    // A single shared point of two collinear pieces is always an endpoint of both.
    if (*lo == *hi) return Relation::touch(origin + *lo * dir);
  }
  return Relation::overlap();
}

inline Interval span_of(const Point& origin, const Point& dir, const Point& from, const Point& to) {
  Rational norm = dot(dir, dir);
  Rational t0 = dot(from - origin, dir) / norm;
  Rational t1 = dot(to - origin, dir) / norm;
  return t0 <= t1 ? Interval{t0, t1} : Interval{t1, t0};
}

inline Interval span_of_ray(const Point& origin, const Point& dir, const Ray& r) {
  Rational norm = dot(dir, dir);
  Rational t0 = dot(r.start() - origin, dir) / norm;
  if (dot(r.direction(), dir).sign() > 0) return {t0, std::nullopt};
  return {std::nullopt, t0};
}

}  // namespace detail

// Segment/segment classification via orientation signs.
inline Relation seg_seg(const Segment& s, const Segment& t) {
  int d1 = orient(t.a(), t.b(), s.a());
  int d2 = orient(t.a(), t.b(), s.b());
  int d3 = orient(s.a(), s.b(), t.a());
  int d4 = orient(s.a(), s.b(), t.b());
  if (d1 == 0 && d2 == 0) {
    Point dir = s.direction();
    return detail::classify_collinear(s.a(), dir, detail::Interval{Rational(0), Rational(1)},
                                      detail::span_of(s.a(), dir, t.a(), t.b()));
  }
  if (d1 * d2 > 0 || d3 * d4 > 0) return Relation::disjoint();
  // Lines are not parallel here: a parallel non-collinear pair has d1 == d2 != 0.
  Point x = *line_intersection(s.a(), s.b(), t.a(), t.b());
  if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) return Relation::touch(std::move(x));
  return Relation::cross(std::move(x));
}

inline Relation ray_seg(const Ray& r, const Segment& s) {
  int o1 = orient(r.start(), r.through(), s.a());
  int o2 = orient(r.start(), r.through(), s.b());
  if (o1 == 0 && o2 == 0) {
    Point dir = r.direction();
    return detail::classify_collinear(r.start(), dir, detail::Interval{Rational(0), std::nullopt},
                                      detail::span_of(r.start(), dir, s.a(), s.b()));
  }
  if (o1 * o2 > 0) return Relation::disjoint();
  Point x = *line_intersection(r.start(), r.through(), s.a(), s.b());
  if (dot(x - r.start(), r.direction()).sign() < 0) return Relation::disjoint();
  if (x == r.start() || o1 == 0 || o2 == 0) return Relation::touch(std::move(x));
  return Relation::cross(std::move(x));
}

inline Relation ray_ray(const Ray& r1, const Ray& r2) {
  Point d1 = r1.direction();
  Point d2 = r2.direction();
  if (cross(d1, d2).is_zero()) {
    if (orient(r1.start(), r1.through(), r2.start()) != 0) return Relation::disjoint();
    return detail::classify_collinear(r1.start(), d1, detail::Interval{Rational(0), std::nullopt},
                                      detail::span_of_ray(r1.start(), d1, r2));
  }
  Point x = *line_intersection(r1.start(), r1.through(), r2.start(), r2.through());
  if (dot(x - r1.start(), d1).sign() < 0 || dot(x - r2.start(), d2).sign() < 0) return Relation::disjoint();
  if (x == r1.start() || x == r2.start()) return Relation::touch(std::move(x));
  return Relation::cross(std::move(x));
}

}  // namespace coseg

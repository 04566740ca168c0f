#pragma once

#include "gdgap/scalar.hpp"

namespace gdgap {

struct Point2 {
    Scalar x1, x2;
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    Scalar x1, x2, x3;
    friend bool operator==(const Point3&, const Point3&) = default;
};

inline Point2 operator+(const Point2& p, const Point2& q) { return {p.x1 + q.x1, p.x2 + q.x2}; }
inline Point2 operator-(const Point2& p, const Point2& q) { return {p.x1 - q.x1, p.x2 - q.x2}; }
inline Point2 operator*(const Scalar& s, const Point2& p) { return {s * p.x1, s * p.x2}; }
inline Point3 operator+(const Point3& p, const Point3& q) {
    return {p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
}
inline Point3 operator-(const Point3& p, const Point3& q) {
    return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
}
inline Point3 operator*(const Scalar& s, const Point3& p) {
    return {s * p.x1, s * p.x2, s * p.x3};
}

inline Scalar dot(const Point2& p, const Point2& q) { return p.x1 * q.x1 + p.x2 * q.x2; }
inline Scalar dot(const Point3& p, const Point3& q) {
    return p.x1 * q.x1 + p.x2 * q.x2 + p.x3 * q.x3;
}
inline Scalar norm2(const Point2& p) { return dot(p, p); }
inline Scalar norm2(const Point3& p) { return dot(p, p); }

inline Point3 cross(const Point3& u, const Point3& v) {
    return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, u.x1 * v.x2 - u.x2 * v.x1};
}

inline Point3 lift(const Point2& p) { return {p.x1, p.x2, Scalar(0)}; }

}  // namespace gdgap

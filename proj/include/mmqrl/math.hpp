#pragma once

#include <algorithm>
#include <cmath>

namespace mmqrl {

struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double z_) : x(x_), z(z_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
    Vec2 operator*(double s) const { return {x * s, z * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; z += o.z; return *this; }

    double dot(const Vec2& o) const { return x * o.x + z * o.z; }
    double norm() const { return std::sqrt(x * x + z * z); }

    Vec2 normalized() const {
        const double n = norm();
        return {x / n, z / n};
    }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec2 horizontal() const { return {x, z}; }
};

// Unit quaternion, w-first. Rotations are active: rotate() maps local to world.
struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quat axis_angle(const Vec3& axis, double angle) {
        const double h = 0.5 * angle;
        const double s = std::sin(h);
        return {std::cos(h), axis.x * s, axis.y * s, axis.z * s};
    }

    static Quat yaw(double angle) { return axis_angle({0.0, 1.0, 0.0}, angle); }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quat conjugate() const { return {w, -x, -y, -z}; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quat normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        // q v q^-1 via the expanded cross-product form.
        const Vec3 u{x, y, z};
        const Vec3 c1{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
        const Vec3 t = c1 * 2.0;
        const Vec3 c2{u.y * t.z - u.z * t.y, u.z * t.x - u.x * t.z, u.x * t.y - u.y * t.x};
        return v + t * w + c2;
    }

    // Fractional rotation: identity at s=0, *this at s=1.
    Quat pow(double s) const {
        const double cw = std::clamp(w, -1.0, 1.0);
        const double angle = 2.0 * std::acos(std::abs(cw));
        if (angle < 1e-12) return Quat{};
        const double sign = cw < 0.0 ? -1.0 : 1.0;
        const double sn = std::sqrt(std::max(0.0, 1.0 - cw * cw));
        Vec3 axis{x * sign / sn, y * sign / sn, z * sign / sn};
        return axis_angle(axis, angle * s);
    }

    // Rotation angle in [0, pi].
    double angle() const {
        return 2.0 * std::acos(std::clamp(std::abs(w), 0.0, 1.0));
    }
};

inline double deg_to_rad(double d) { return d * (M_PI / 180.0); }
inline double rad_to_deg(double r) { return r * (180.0 / M_PI); }

}  // namespace mmqrl

#pragma once

#include <cmath>
#include <stdexcept>

namespace qoptml {

/// Symmetric 2x2 matrix, stored as (xx, xy, yy).
struct SymMat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double det() const { return xx * yy - xy * xy; }
    double trace() const { return xx + yy; }

    SymMat2 inverse() const {
        const double d = det();
        if (d == 0.0) throw std::domain_error("SymMat2: singular matrix");
        return {yy / d, -xy / d, xx / d};
    }

    SymMat2 operator+(const SymMat2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    SymMat2 operator-(const SymMat2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }

    /// v^T M v for v = (x, y).
    double quad_form(double x, double y) const { return xx * x * x + 2.0 * xy * x * y + yy * y * y; }

    double frobenius_sq() const { return xx * xx + 2.0 * xy * xy + yy * yy; }
};

/// General 2x2 matrix, row major.
struct Mat2 {
    double a00 = 1.0, a01 = 0.0;
    double a10 = 0.0, a11 = 1.0;

    static Mat2 rotation(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c, -s, s, c};
    }

    double det() const { return a00 * a11 - a01 * a10; }

    Mat2 inverse() const {
        const double d = det();
        if (d == 0.0) throw std::domain_error("Mat2: singular matrix");
        return {a11 / d, -a01 / d, -a10 / d, a00 / d};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }

    Mat2 operator*(double k) const { return {a00 * k, a01 * k, a10 * k, a11 * k}; }

    void apply(double x, double y, double& ox, double& oy) const {
        ox = a00 * x + a01 * y;
        oy = a10 * x + a11 * y;
    }

    /// M S M^T for symmetric S.
    SymMat2 congruence(const SymMat2& s) const {
        const double b00 = a00 * s.xx + a01 * s.xy;
        const double b01 = a00 * s.xy + a01 * s.yy;
        const double b10 = a10 * s.xx + a11 * s.xy;
        const double b11 = a10 * s.xy + a11 * s.yy;
        return {b00 * a00 + b01 * a01, b00 * a10 + b01 * a11, b10 * a10 + b11 * a11};
    }
};

/// Eigen-decomposition of a symmetric 2x2 matrix.
/// Returns eigenvalues lambda_max >= lambda_min and the angle (in [0, pi)) of
/// the eigenvector belonging to lambda_max.
struct SymEig2 {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double angle = 0.0;
};

inline SymEig2 sym_eig2(const SymMat2& m) {
    const double mean = 0.5 * (m.xx + m.yy);
    const double half_diff = 0.5 * (m.xx - m.yy);
    const double radius = std::hypot(half_diff, m.xy);
    SymEig2 e;
    e.lambda_max = mean + radius;
    e.lambda_min = mean - radius;
    e.angle = (radius == 0.0) ? 0.0 : 0.5 * std::atan2(2.0 * m.xy, m.xx - m.yy);
    if (e.angle < 0.0) e.angle += std::acos(-1.0);
    return e;
}

}  // namespace qoptml

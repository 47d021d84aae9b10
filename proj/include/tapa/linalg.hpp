#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "tapa/complex_io.hpp"

namespace tapa {

/// 2x2 complex matrix, row-major. Holds SL2 representation images.
struct Mat2 {
    std::array<Cplx, 4> e{};

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }

    Cplx& at(int r, int c) { return e[2 * r + c]; }
    const Cplx& at(int r, int c) const { return e[2 * r + c]; }

    Cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
    Cplx trace() const { return e[0] + e[3]; }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
        return r;
    }

    Mat2 operator-(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    Mat2 operator*(const Cplx& c) const {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.e[i] = e[i] * c;
        return r;
    }

    /// Adjugate over determinant; exact for unimodular input.
    Mat2 inverse() const {
        const Cplx d = det();
        return Mat2{{e[3] / d, -e[1] / d, -e[2] / d, e[0] / d}};
    }

    Mat2 pow(long n) const;

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e) m = std::max(m, std::abs(v));
        return m;
    }

    double distance(const Mat2& o) const { return (*this - o).max_abs(); }
};

/// 3x3 complex matrix, row-major. Holds adjoint lifts of SL2 images.
struct Mat3 {
    std::array<Cplx, 9> e{};

    static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Cplx& at(int r, int c) { return e[3 * r + c]; }
    const Cplx& at(int r, int c) const { return e[3 * r + c]; }

    Cplx det() const;
    Cplx trace() const { return e[0] + e[4] + e[8]; }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Cplx s = 0.0;
                for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    Mat3 operator*(const Cplx& c) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] * c;
        return r;
    }

    Mat3 inverse() const;
    Mat3 transpose() const;
    Mat3 pow(long n) const;

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e) m = std::max(m, std::abs(v));
        return m;
    }

    double distance(const Mat3& o) const { return (*this - o).max_abs(); }
};

} // namespace tapa

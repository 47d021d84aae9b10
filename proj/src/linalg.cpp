#include "tapa/linalg.hpp"

namespace tapa {

Mat2 Mat2::pow(long n) const {
    Mat2 base = n < 0 ? inverse() : *this;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Mat2 acc = Mat2::identity();
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Cplx Mat3::det() const {
    return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
           e[2] * (e[3] * e[7] - e[4] * e[6]);
}

Mat3 Mat3::inverse() const {
    const Cplx d = det();
    Mat3 r;
    r.e[0] = (e[4] * e[8] - e[5] * e[7]) / d;
    r.e[1] = (e[2] * e[7] - e[1] * e[8]) / d;
    r.e[2] = (e[1] * e[5] - e[2] * e[4]) / d;
    r.e[3] = (e[5] * e[6] - e[3] * e[8]) / d;
    r.e[4] = (e[0] * e[8] - e[2] * e[6]) / d;
    r.e[5] = (e[2] * e[3] - e[0] * e[5]) / d;
    r.e[6] = (e[3] * e[7] - e[4] * e[6]) / d;
    r.e[7] = (e[1] * e[6] - e[0] * e[7]) / d;
    r.e[8] = (e[0] * e[4] - e[1] * e[3]) / d;
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

Mat3 Mat3::pow(long n) const {
    Mat3 base = n < 0 ? inverse() : *this;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Mat3 acc = Mat3::identity();
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

} // namespace tapa

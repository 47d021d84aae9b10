#pragma once

#include <vector>

#include "tapa/complex_io.hpp"

namespace tapa {

/// Relative threshold below which coefficients are treated as zero when
/// trimming polynomial ends.
inline constexpr double kTrimEps = 1e-11;

/// Relative threshold for "vanishes at t = 1" checks.
inline constexpr double kRootEps = 1e-8;

/// Complex-coefficient Laurent polynomial in one variable t, stored as a
/// dense coefficient run starting at min_degree. Always kept trimmed: the
/// first and last stored coefficients are nonzero (relative to the largest
/// coefficient magnitude), except for the canonical zero polynomial, which
/// stores nothing.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(double c) { *this = constant(Cplx(c, 0.0)); }
    LaurentPoly(const Cplx& c) { *this = constant(c); }

    static LaurentPoly constant(const Cplx& c);
    static LaurentPoly monomial(const Cplx& c, long degree);
    /// t^min_degree * (coeffs[0] + coeffs[1] t + ...), trimmed on entry.
    static LaurentPoly from_coeffs(long min_degree, std::vector<Cplx> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const { return min_degree_; }
    long max_degree() const { return min_degree_ + static_cast<long>(coeffs_.size()) - 1; }
    /// Number of stored coefficients minus one; -1 for the zero polynomial.
    long degree_span() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Cplx>& coeffs() const { return coeffs_; }

    Cplx coeff(long degree) const;
    double max_abs_coeff() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Cplx& c) const;
    /// Multiplication by t^k.
    LaurentPoly shifted(long k) const;

    /// Horner evaluation. z = 0 with negative degrees is a domain error.
    Cplx eval(const Cplx& z) const;

    bool near(const LaurentPoly& o, double tol) const;

    /// Copy re-trimmed at a caller-chosen relative threshold.
    LaurentPoly retrimmed(double rel_eps) const;

  private:
    void trim(double rel_eps = kTrimEps);

    long min_degree_ = 0;
    std::vector<Cplx> coeffs_;
};

/// Quotient of p by (t - 1) via synthetic division. Precondition: p(1) ~ 0
/// (relative to the coefficient scale); violations raise NumericalError.
/// The absolute division remainder is reported through *remainder if given.
LaurentPoly divide_out_t_minus_1(const LaurentPoly& p, double* remainder = nullptr);

/// Pair of Laurent polynomials compared modulo units +-t^m. Canonical form:
/// numerator and denominator both shifted so their min degree is 0.
struct RationalFunction {
    LaurentPoly num;
    LaurentPoly den;

    static RationalFunction canonical(LaurentPoly num, LaurentPoly den);
};

struct UnitComparison {
    bool equal = false;
    int sign = 1;           // g = sign * t^power * f when equal
    long power = 0;
    double residual = 0.0;  // max coefficient mismatch relative to scale
};

/// Cross-multiplied comparison of two rational functions up to a unit c*t^m
/// with c in {+1,-1}. m comes from degree bookkeeping, not search.
UnitComparison rational_equal_up_to_unit(const RationalFunction& f,
                                         const RationalFunction& g, double tol);

std::string to_string(const LaurentPoly& p); // human-readable, for diagnostics

} // namespace tapa

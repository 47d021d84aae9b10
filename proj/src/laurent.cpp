#include "tapa/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tapa/errors.hpp"

namespace tapa {

LaurentPoly LaurentPoly::constant(const Cplx& c) {
    LaurentPoly p;
    p.coeffs_ = {c};
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::monomial(const Cplx& c, long degree) {
    LaurentPoly p;
    p.min_degree_ = degree;
    p.coeffs_ = {c};
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(long min_degree, std::vector<Cplx> coeffs) {
    LaurentPoly p;
    p.min_degree_ = min_degree;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Cplx LaurentPoly::coeff(long degree) const {
    const long idx = degree - min_degree_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

double LaurentPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void LaurentPoly::trim(double rel_eps) {
    const double scale = max_abs_coeff();
    const double cut = scale * rel_eps;
    std::size_t lo = 0, hi = coeffs_.size();
    while (lo < hi && std::abs(coeffs_[lo]) <= cut) ++lo;
    while (hi > lo && std::abs(coeffs_[hi - 1]) <= cut) --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_degree_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<Cplx>(coeffs_.begin() + static_cast<long>(lo),
                                    coeffs_.begin() + static_cast<long>(hi));
        min_degree_ += static_cast<long>(lo);
    }
}

LaurentPoly LaurentPoly::retrimmed(double rel_eps) const {
    LaurentPoly p = *this;
    p.trim(rel_eps);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const long lo = std::min(min_degree_, o.min_degree_);
    const long hi = std::max(max_degree(), o.max_degree());
    std::vector<Cplx> c(static_cast<std::size_t>(hi - lo + 1), Cplx(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[static_cast<std::size_t>(min_degree_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        c[static_cast<std::size_t>(o.min_degree_ - lo) + i] += o.coeffs_[i];
    return from_coeffs(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<Cplx> c(coeffs_.size() + o.coeffs_.size() - 1, Cplx(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(min_degree_ + o.min_degree_, std::move(c));
}

LaurentPoly LaurentPoly::scaled(const Cplx& c) const {
    LaurentPoly p = *this;
    for (auto& v : p.coeffs_) v *= c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.min_degree_ += k;
    return p;
}

Cplx LaurentPoly::eval(const Cplx& z) const {
    if (is_zero()) return 0.0;
    if (min_degree_ < 0 && z == Cplx(0.0))
        throw DomainError("evaluation at 0 with negative degrees");
    Cplx acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    // Multiply by z^min_degree (min_degree may be negative).
    Cplx zp = 1.0;
    long m = min_degree_;
    Cplx base = m < 0 ? Cplx(1.0) / z : z;
    for (long i = std::labs(m); i > 0; --i) zp *= base;
    return acc * zp;
}

bool LaurentPoly::near(const LaurentPoly& o, double tol) const {
    const LaurentPoly d = *this - o;
    const double scale = std::max({max_abs_coeff(), o.max_abs_coeff(), 1.0});
    return d.max_abs_coeff() <= tol * scale;
}

LaurentPoly divide_out_t_minus_1(const LaurentPoly& p, double* remainder) {
    if (p.is_zero()) throw NumericalError("cannot divide the zero polynomial by (t-1)");
    const double scale = p.max_abs_coeff();
    // p = t^m * P with P ordinary; P(1) = p(1), and the quotient shifts back.
    const std::vector<Cplx>& a = p.coeffs();
    const std::size_t n = a.size();
    // Synthetic division of P by (t - 1), top down; final carry is P(1).
    std::vector<Cplx> q(n > 1 ? n - 1 : 0, Cplx(0.0));
    Cplx carry = a[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        q[i] = carry;
        carry = a[i] + carry;
    }
    const double rem = std::abs(carry);
    if (remainder) *remainder = rem;
    if (rem > kRootEps * scale)
        throw NumericalError("polynomial does not vanish at t=1; remainder " +
                             std::to_string(rem));
    return LaurentPoly::from_coeffs(p.min_degree(), std::move(q));
}

RationalFunction RationalFunction::canonical(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (!num.is_zero()) num = num.shifted(-num.min_degree());
    den = den.shifted(-den.min_degree());
    return RationalFunction{std::move(num), std::move(den)};
}

UnitComparison rational_equal_up_to_unit(const RationalFunction& f,
                                         const RationalFunction& g, double tol) {
    if (f.den.is_zero() || g.den.is_zero())
        throw DomainError("unit comparison requires nonzero denominators");
    // Cross-multiply; never divide.
    LaurentPoly a = (f.num * g.den).retrimmed(tol);
    LaurentPoly b = (g.num * f.den).retrimmed(tol);

    UnitComparison r;
    if (a.is_zero() && b.is_zero()) {
        r.equal = true;
        return r;
    }
    if (a.is_zero() || b.is_zero()) return r;

    if (a.degree_span() != b.degree_span()) return r;
    // Unit reported as g = sign * t^power * f, i.e. b = sign * t^power * a.
    r.power = b.min_degree() - a.min_degree();

    const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    double best = -1.0;
    for (int sign : {+1, -1}) {
        double res = 0.0;
        for (long d = b.min_degree(); d <= b.max_degree(); ++d)
            res = std::max(res, std::abs(b.coeff(d) - static_cast<double>(sign) * a.coeff(d - r.power)));
        if (best < 0.0 || res < best) {
            best = res;
            r.sign = sign;
        }
    }
    r.residual = best / scale;
    r.equal = r.residual <= tol;
    return r;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = p.min_degree(); d <= p.max_degree(); ++d) {
        const Cplx c = p.coeff(d);
        if (c == Cplx(0.0)) continue;
        if (!first) os << " + ";
        os << "(" << format_complex(c) << ")";
        if (d != 0) os << "*t^" << d;
        first = false;
    }
    return os.str();
}

} // namespace tapa

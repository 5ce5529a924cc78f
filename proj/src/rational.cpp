#include "tavg/rational.hpp"

#include <cmath>

#include "tavg/errors.hpp"

namespace tavg {

const char* to_string(Domain d) { return d == Domain::Z ? "z" : "s"; }

RationalTransform::RationalTransform(Polynomial numerator, Polynomial denominator, Domain domain)
    : num_(std::move(numerator)), den_(std::move(denominator)), domain_(domain) {
    if (den_.is_zero())
        throw Error(ErrorCode::PreconditionViolation, "rational transform with zero denominator");
}

RationalTransform RationalTransform::zero(Domain domain) {
    return RationalTransform(Polynomial(), Polynomial::constant(1.0), domain);
}

namespace {

// Horner evaluation of the degree-reversed coefficients at w.
Complex reversed_eval(const Polynomial& p, Complex w) {
    Complex acc(0.0);
    const auto& c = p.coeffs();
    for (const auto& ck : c) acc = acc * w + ck;
    return acc;
}

}  // namespace

Complex RationalTransform::eval(Complex x) const {
    if (num_.is_zero()) return Complex(0.0);
    if (std::abs(x) > 1e8) {
        // num(x)/den(x) = x^(deg num - deg den) * rev_num(1/x) / rev_den(1/x)
        Complex w = 1.0 / x;
        Complex ratio = reversed_eval(num_, w) / reversed_eval(den_, w);
        int shift = num_.degree() - den_.degree();
        return ratio * std::pow(x, shift);
    }
    return num_.eval(x) / den_.eval(x);
}

RationalTransform RationalTransform::operator-() const {
    return RationalTransform(-num_, den_, domain_);
}

namespace {

void require_same_domain(const RationalTransform& a, const RationalTransform& b) {
    if (a.domain() != b.domain())
        throw Error(ErrorCode::WrongDomain, "mixed z/s operands in rational arithmetic");
}

}  // namespace

RationalTransform operator+(const RationalTransform& a, const RationalTransform& b) {
    require_same_domain(a, b);
    return RationalTransform(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.domain_);
}

RationalTransform operator-(const RationalTransform& a, const RationalTransform& b) {
    return a + (-b);
}

RationalTransform operator*(const RationalTransform& a, const RationalTransform& b) {
    require_same_domain(a, b);
    return RationalTransform(a.num_ * b.num_, a.den_ * b.den_, a.domain_);
}

RationalTransform operator*(Complex s, const RationalTransform& r) {
    return RationalTransform(s * r.num_, r.den_, r.domain_);
}

RationalTransform operator*(const Polynomial& p, const RationalTransform& r) {
    return RationalTransform(p * r.num_, r.den_, r.domain_);
}

ReduceResult reduce_at_point(const RationalTransform& r, Complex x0, double tol) {
    Polynomial num = r.numerator();
    Polynomial den = r.denominator();
    int cancelled = 0;
    while (den.degree() >= 1 && den.vanishes_at(x0, tol) && num.vanishes_at(x0, tol)) {
        den = den.deflate(x0);
        if (!num.is_zero()) num = num.deflate(x0);
        ++cancelled;
    }
    return {RationalTransform(std::move(num), std::move(den), r.domain()), cancelled};
}

PoleSet effective_poles(const RationalTransform& r, const Tolerances& tol) {
    PoleSet out;
    out.tolerance_used = tol.root_cluster;
    if (r.denominator().degree() < 1 || r.is_zero()) return out;

    PoleSet den_roots = roots(r.denominator(), tol.root_cluster, tol);

    // Cancel common factors by root matching. Matching roots to roots is
    // symmetric in the two polynomials' root-finding error, which testing
    // numerator values at clustered pole centroids is not.
    std::vector<PoleEntry> zeros;
    if (r.numerator().degree() >= 1)
        zeros = roots(r.numerator(), tol.root_cluster, tol).poles;

    for (const auto& entry : den_roots.poles) {
        double match_band = 2.0 * tol.root_cluster * (1.0 + std::abs(entry.location));
        int cancelled = 0;
        for (const auto& z : zeros)
            if (std::abs(z.location - entry.location) <= match_band) cancelled += z.multiplicity;
        int mult = entry.multiplicity - std::min(entry.multiplicity, cancelled);
        if (mult > 0) out.poles.push_back({entry.location, mult});
    }
    return out;
}

}  // namespace tavg

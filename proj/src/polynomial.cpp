#include "tavg/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace tavg {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, Complex c) {
    std::vector<Complex> coeffs(static_cast<size_t>(k) + 1, Complex(0.0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

Complex Polynomial::eval(Complex x) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Polynomial::eval_with_derivative(Complex x, Complex& value, Complex& deriv) const {
    value = Complex(0.0);
    deriv = Complex(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        deriv = deriv * x + value;
        value = value * x + *it;
    }
}

double Polynomial::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::scale_at(Complex x) const {
    double ax = std::abs(x);
    double acc = 0.0;
    double xp = 1.0;
    for (const auto& c : coeffs_) {
        acc += std::abs(c) * xp;
        xp *= ax;
    }
    return acc;
}

bool Polynomial::vanishes_at(Complex x0, double tol) const {
    if (is_zero()) return true;
    return std::abs(eval(x0)) <= tol * scale_at(x0);
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Complex> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::deflate(Complex x0) const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Complex> q(coeffs_.size() - 1);
    Complex carry = coeffs_.back();
    for (size_t k = coeffs_.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + carry * x0;
    }
    return Polynomial(std::move(q));
}

Polynomial Polynomial::operator-() const {
    std::vector<Complex> out(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(Complex s, const Polynomial& p) {
    std::vector<Complex> out(p.coeffs_.size());
    for (size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = s * p.coeffs_[k];
    return Polynomial(std::move(out));
}

int PoleSet::total_multiplicity() const {
    int total = 0;
    for (const auto& p : poles) total += p.multiplicity;
    return total;
}

int PoleSet::multiplicity_at(Complex at, double band) const {
    int best = 0;
    for (const auto& p : poles)
        if (std::abs(p.location - at) <= band) best = std::max(best, p.multiplicity);
    return best;
}

}  // namespace tavg

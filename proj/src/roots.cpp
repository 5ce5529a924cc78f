#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "tavg/errors.hpp"
#include "tavg/polynomial.hpp"

namespace tavg {

namespace {

constexpr double kMachineEps = 2.220446049250313e-16;

double scale_at(const std::vector<Complex>& c, Complex x) {
    double ax = std::abs(x);
    double acc = 0.0;
    double xp = 1.0;
    for (const auto& ck : c) {
        acc += std::abs(ck) * xp;
        xp *= ax;
    }
    return acc;
}

void horner_pair(const std::vector<Complex>& c, Complex x, Complex& value, Complex& deriv) {
    value = Complex(0.0);
    deriv = Complex(0.0);
    for (size_t k = c.size(); k-- > 0;) {
        deriv = deriv * x + value;
        value = value * x + c[k];
    }
}

std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
    Complex disc = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sign that avoids cancellation in b + disc.
    Complex q = (std::abs(b + disc) >= std::abs(b - disc)) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    if (std::abs(q) == 0.0) return {Complex(0.0), Complex(0.0)};
    return {q / a, c / q};
}

// Guarded Newton polish; leaves the root alone when the step is unreliable.
Complex polish(const std::vector<Complex>& c, Complex x) {
    for (int pass = 0; pass < 3; ++pass) {
        Complex v, d;
        horner_pair(c, x, v, d);
        double vm = std::abs(v);
        if (vm <= 4.0 * kMachineEps * scale_at(c, x)) break;
        if (std::abs(d) <= vm * 1e-8) break;
        Complex step = v / d;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(x))) break;
        Complex xn = x - step;
        Complex vn, dn;
        horner_pair(c, xn, vn, dn);
        if (std::abs(vn) >= vm) break;
        x = xn;
    }
    return x;
}

// Simultaneous Aberth-Ehrlich iteration on a monic coefficient list.
bool aberth(const std::vector<Complex>& c, int max_iter, std::vector<Complex>& out) {
    const int n = static_cast<int>(c.size()) - 1;
    out.resize(static_cast<size_t>(n));

    // Start on a circle whose radius is the geometric mean of the root
    // moduli, with an angular offset that breaks conjugate symmetry.
    double gm = std::pow(std::max(std::abs(c[0]), 1e-30), 1.0 / n);
    double cauchy = 0.0;
    for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(c[static_cast<size_t>(k)]));
    double radius = std::min(std::max(gm, 1e-3), 1.0 + cauchy);
    for (int i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * i / n + 0.43;
        out[static_cast<size_t>(i)] = radius * Complex(std::cos(theta), std::sin(theta));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        int active = 0;
        for (int i = 0; i < n; ++i) {
            Complex xi = out[static_cast<size_t>(i)];
            Complex v, d;
            horner_pair(c, xi, v, d);
            // Converged roots sit out this round; they are re-checked every
            // iteration since the repulsion terms keep shifting.
            if (std::abs(v) <= 8.0 * n * kMachineEps * scale_at(c, xi)) continue;
            ++active;
            Complex newton = (std::abs(d) > 0.0) ? v / d : Complex(1e-3, 1e-3);
            Complex repulsion(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = xi - out[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-12, 1e-12);
                repulsion += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * repulsion;
            Complex step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            out[static_cast<size_t>(i)] = xi - step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(xi)));
        }
        if (active == 0 || max_step < 4.0 * kMachineEps) break;
    }

    for (auto& r : out) r = polish(c, r);
    return true;
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = Complex(1.0);
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = polish(c, solver.eigenvalues()(i));
    return out;
}

bool residuals_ok(const std::vector<Complex>& c, const std::vector<Complex>& rts, double rel_tol) {
    for (const auto& r : rts) {
        Complex v, d;
        horner_pair(c, r, v, d);
        if (std::abs(v) > rel_tol * scale_at(c, r)) return false;
    }
    return true;
}

PoleSet cluster(std::vector<Complex> rts, double cluster_tol) {
    PoleSet set;
    set.tolerance_used = cluster_tol;
    std::vector<std::vector<Complex>> groups;
    for (const auto& r : rts) {
        bool placed = false;
        for (auto& g : groups) {
            for (const auto& member : g) {
                if (std::abs(member - r) <= cluster_tol) {
                    g.push_back(r);
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed) groups.push_back({r});
    }
    // Chain-merge groups whose members ended up within tolerance of each other.
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < groups.size() && !merged; ++i) {
            for (size_t j = i + 1; j < groups.size() && !merged; ++j) {
                for (const auto& a : groups[i]) {
                    for (const auto& b : groups[j]) {
                        if (std::abs(a - b) <= cluster_tol) {
                            groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
                            groups.erase(groups.begin() + static_cast<long>(j));
                            merged = true;
                            break;
                        }
                    }
                    if (merged) break;
                }
            }
        }
    }
    for (const auto& g : groups) {
        Complex centroid(0.0);
        for (const auto& m : g) centroid += m;
        centroid /= static_cast<double>(g.size());
        set.poles.push_back({centroid, static_cast<int>(g.size())});
    }
    std::sort(set.poles.begin(), set.poles.end(), [](const PoleEntry& a, const PoleEntry& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return set;
}

}  // namespace

PoleSet roots(const Polynomial& p, double cluster_tol, const Tolerances& tol) {
    if (p.degree() < 1)
        throw Error(ErrorCode::PreconditionViolation, "roots requires degree >= 1");

    // Monic normalization.
    std::vector<Complex> c = p.coeffs();
    Complex lead = c.back();
    for (auto& ck : c) ck /= lead;

    // Exact zeros in the constant term are roots at the origin.
    std::vector<Complex> found;
    while (c.size() > 1 && c.front() == Complex(0.0)) {
        found.push_back(Complex(0.0));
        c.erase(c.begin());
    }

    const int n = static_cast<int>(c.size()) - 1;
    if (n == 1) {
        found.push_back(-c[0]);
    } else if (n == 2) {
        auto q = quadratic_roots(c[2], c[1], c[0]);
        found.insert(found.end(), q.begin(), q.end());
    } else if (n >= 3) {
        std::vector<Complex> rts;
        aberth(c, tol.root_max_iter, rts);
        if (!residuals_ok(c, rts, tol.root_residual)) {
            rts = companion_eigenvalues(c);
            if (!residuals_ok(c, rts, tol.root_residual))
                throw Error(ErrorCode::NonConvergence,
                            "root iteration failed the residual target in both stages");
        }
        found.insert(found.end(), rts.begin(), rts.end());
    }

    return cluster(std::move(found), cluster_tol);
}

}  // namespace tavg

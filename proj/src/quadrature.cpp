#include "tavg/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace tavg {

namespace {

using Cplx = std::complex<double>;

// Kronrod-15 abscissae on [-1, 1] (positive half) and weights; the odd
// entries are the embedded Gauss-7 nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    Cplx value;
    double error;
};

Panel evaluate_panel(const std::function<Cplx(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    Cplx fk[15];
    for (int i = 0; i < 7; ++i) {
        fk[i] = f(mid - half * kXgk[i]);
        fk[14 - i] = f(mid + half * kXgk[i]);
    }
    fk[7] = f(mid);

    Cplx kronrod(0.0), gauss(0.0);
    for (int i = 0; i < 7; ++i) kronrod += kWgk[i] * (fk[i] + fk[14 - i]);
    kronrod += kWgk[7] * fk[7];
    for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
    gauss += kWg[3] * fk[7];

    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * half;
    p.error = std::abs(kronrod - gauss) * half;
    return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                                    double abs_tol, int max_panels) {
    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

    QuadratureResult result;
    queue.push(evaluate_panel(f, a, b));
    result.evaluations = 15;
    double total_error = queue.top().error;

    int panels = 1;
    while (total_error > abs_tol && panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // interval no longer splittable
            queue.push(worst);
            break;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        result.evaluations += 30;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    Cplx sum(0.0);
    double err = 0.0;
    while (!queue.empty()) {
        sum += queue.top().value;
        err += queue.top().error;
        queue.pop();
    }
    result.value = sum;
    result.error_estimate = err;
    result.converged = err <= abs_tol;
    return result;
}

QuadratureResult integrate_to_infinity(const std::function<Cplx(double)>& f, double a,
                                       double abs_tol, int max_panels) {
    auto transformed = [&f, a](double u) -> Cplx {
        double one_minus = 1.0 - u;
        double x = a + u / one_minus;
        if (!std::isfinite(x)) return Cplx(0.0);
        return f(x) / (one_minus * one_minus);
    };
    return integrate_adaptive(transformed, 0.0, 1.0, abs_tol, max_panels);
}

}  // namespace tavg

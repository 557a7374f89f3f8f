#include "geospec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace geospec {

// Newton iteration on Legendre polynomials; standard construction.
GaussLegendre::GaussLegendre(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

const GaussLegendre& gl16() {
    static const GaussLegendre rule(16);
    return rule;
}

const GaussLegendre& gl32() {
    static const GaussLegendre rule(32);
    return rule;
}

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol_abs, int panels0,
                                        int max_doublings) {
    int panels = panels0;
    std::complex<double> prev = integrate_panels(f, a, b, panels, gl16());
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        std::complex<double> cur = integrate_panels(f, a, b, panels, gl16());
        if (std::abs(cur - prev) <= tol_abs) return cur;
        prev = cur;
    }
    return prev;
}

double integrate_adaptive_real(const std::function<double(double)>& f, double a, double b,
                               double tol_abs, int panels0, int max_doublings) {
    int panels = panels0;
    double prev = integrate_panels(f, a, b, panels, gl16());
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        double cur = integrate_panels(f, a, b, panels, gl16());
        if (std::abs(cur - prev) <= tol_abs) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace geospec

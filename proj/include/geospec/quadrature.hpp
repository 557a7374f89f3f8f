#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace geospec {

// Gauss-Legendre nodes/weights on [-1,1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int n);
};

const GaussLegendre& gl16();
const GaussLegendre& gl32();

// Fixed-panel Gauss-Legendre integration of f over [a,b].
template <typename F>
auto integrate_panels(F&& f, double a, double b, int panels, const GaussLegendre& rule)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R acc{};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h;
        R local{};
        for (size_t k = 0; k < rule.nodes.size(); ++k)
            local += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        acc += 0.5 * h * local;
    }
    return acc;
}

// Panel-doubling refinement until successive estimates agree to tol_abs.
// Starts from `panels0` panels of GL-16 and doubles up to `max_doublings`.
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol_abs, int panels0 = 4,
                                        int max_doublings = 12);

double integrate_adaptive_real(const std::function<double(double)>& f, double a, double b,
                               double tol_abs, int panels0 = 4, int max_doublings = 12);

}  // namespace geospec

#include "nipg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace nipg {

QuadratureRule gauss_legendre_rule(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("gauss_legendre_rule: n must lie in [1, 10]");

    QuadratureRule rule;
    rule.points.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n with the classical Chebyshev-like initial
    // guess; converges to machine precision in a handful of steps.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // re-evaluate P_{n-1}, P_n' at the converged root for the weight
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = -x;
        rule.points[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.points[n / 2] = 0.0;  // exact center for odd rules
    return rule;
}

}  // namespace nipg

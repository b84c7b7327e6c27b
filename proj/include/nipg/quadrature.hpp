#pragma once

#include <vector>

namespace nipg {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

/// n-point Gauss-Legendre rule, 1 <= n <= 10. Exact for polynomials of
/// degree <= 2n - 1.
QuadratureRule gauss_legendre_rule(int n);

}  // namespace nipg

#pragma once

#include <vector>

namespace nipg {

/// Lagrange basis of degree k on the reference interval [-1, 1], nodal at
/// the Gauss-Lobatto points (which include both endpoints, so the
/// interpolant of a continuous function is continuous across elements).
class LocalBasis {
public:
    explicit LocalBasis(int degree);  // degree in {1, 2, 3}

    int degree() const { return k_; }
    int size() const { return k_ + 1; }
    const std::vector<double>& nodes() const { return nodes_; }

    double value(int j, double t) const;
    double derivative(int j, double t) const;

private:
    int k_;
    std::vector<double> nodes_;
};

}  // namespace nipg

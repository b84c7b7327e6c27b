#include "nipg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace nipg {

LocalBasis::LocalBasis(int degree) : k_(degree) {
    switch (degree) {
        case 1: nodes_ = {-1.0, 1.0}; break;
        case 2: nodes_ = {-1.0, 0.0, 1.0}; break;
        case 3: {
            const double s = 1.0 / std::sqrt(5.0);
            nodes_ = {-1.0, -s, s, 1.0};
            break;
        }
        default:
            throw std::invalid_argument("LocalBasis: degree must be 1, 2 or 3");
    }
}

double LocalBasis::value(int j, double t) const {
    if (j < 0 || j > k_) throw std::invalid_argument("LocalBasis::value: index out of range");
    double v = 1.0;
    for (int i = 0; i <= k_; ++i) {
        if (i == j) continue;
        v *= (t - nodes_[i]) / (nodes_[j] - nodes_[i]);
    }
    return v;
}

double LocalBasis::derivative(int j, double t) const {
    if (j < 0 || j > k_) throw std::invalid_argument("LocalBasis::derivative: index out of range");
    double sum = 0.0;
    for (int m = 0; m <= k_; ++m) {
        if (m == j) continue;
        double term = 1.0 / (nodes_[j] - nodes_[m]);
        for (int i = 0; i <= k_; ++i) {
            if (i == j || i == m) continue;
            term *= (t - nodes_[i]) / (nodes_[j] - nodes_[i]);
        }
        sum += term;
    }
    return sum;
}

}  // namespace nipg

#include "nipg/problem.hpp"

#include <limits>
#include <utility>

namespace nipg {

ScalarFn manufacture_rhs(ScalarFn exact_u, ScalarFn exact_ddu, ScalarFn c,
                         double eps) {
    return [u = std::move(exact_u), ddu = std::move(exact_ddu),
            cf = std::move(c), eps](double x) {
        return -eps * eps * ddu(x) + cf(x) * u(x);
    };
}

double min_coefficient_sample(const ScalarFn& c, int samples) {
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / (samples - 1);
        lo = std::min(lo, c(x));
    }
    return lo;
}

}  // namespace nipg

#pragma once

#include <functional>

namespace nipg {

using ScalarFn = std::function<double(double)>;

/// Reaction-diffusion two-point problem -eps^2 u'' + c(x) u = f(x) on
/// (0,1) with u(0) = u(1) = 0. `gamma_tilde` is the coercivity constant
/// (c >= gamma_tilde^2 > 0), `gamma` the layer decay rate used for mesh
/// grading, 0 < gamma <= gamma_tilde.
struct ProblemSpec {
    double epsilon = 1.0;
    ScalarFn c;
    ScalarFn f;
    ScalarFn exact_u;   // empty when no exact solution is known
    ScalarFn exact_du;
    double gamma_tilde = 1.0;
    double gamma = 1.0;

    bool has_exact() const { return static_cast<bool>(exact_u); }
};

/// f(x) = -eps^2 u''(x) + c(x) u(x) for a manufactured solution.
ScalarFn manufacture_rhs(ScalarFn exact_u, ScalarFn exact_ddu, ScalarFn c,
                         double eps);

/// min of c over a uniform sample grid; used to check c >= gamma_tilde^2.
double min_coefficient_sample(const ScalarFn& c, int samples = 10001);

}  // namespace nipg

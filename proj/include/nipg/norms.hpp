#pragma once

#include <array>
#include <vector>

#include "nipg/dg.hpp"
#include "nipg/penalty.hpp"
#include "nipg/problem.hpp"
#include "nipg/quadrature.hpp"

namespace nipg {

/// Energy and balanced norms of u - u^N. Component order:
/// {weighted gradient part, c-weighted L2 part, penalty jump part};
/// e_dG^2 uses the eps^2 gradient weight, e_dGb^2 the eps weight, the
/// other two components coincide.
struct ErrorReport {
    double e_dG = 0.0;
    double e_dGb = 0.0;
    std::array<double, 3> dg_components{};
    std::array<double, 3> dgb_components{};
};

ErrorReport error_norms(const ScalarFn& exact_u, const ScalarFn& exact_du,
                        const DGFunction& uh, const PenaltyScheme& penalties,
                        const ScalarFn& c, double eps, const QuadratureRule& quad);

/// log2(e_coarse / e_fine); both inputs must be positive.
double convergence_rate(double e_coarse, double e_fine);

/// Element-wise interpolation at the mapped Gauss-Lobatto nodes; globally
/// continuous because the endpoints are basis nodes.
DGFunction lagrange_interpolant(const ScalarFn& u, const DGSpace& space);

/// Weighted L2 projection: (c u_pi, xi) = (c u, xi) for all xi in the
/// broken space; decouples into (k+1)x(k+1) systems per element.
DGFunction weighted_l2_projection(const ScalarFn& u, const ScalarFn& c,
                                  const DGSpace& space, const QuadratureRule& quad);

enum class InterpolantKind { Lagrange, WeightedProjection };

/// Interpolation-error measurements for one mesh. Sup-type norms are taken
/// over quadrature points plus one-sided element endpoints (a lower bound
/// on the true sup). Weighted quantities: winf = eps * ||eta'||_inf,
/// h1 = eps^{1/2} |eta|_{H1,d}. Fine/coarse split by element for S-type
/// meshes; DL meshes report the uniform-width layer cells as "fine".
struct InterpErrorRow {
    int n = 0;           // number of mesh elements
    double h = 0.0;      // DL mesh parameter H (0 for S-type)
    double linf_coarse = 0, linf_fine = 0, linf = 0;
    double winf_coarse = 0, winf_fine = 0, winf = 0;
    double l2_coarse = 0, l2_fine = 0, l2 = 0;
    double h1_coarse = 0, h1_fine = 0, h1 = 0;
    double eta_dg = 0;   // dG norm of eta = u - u* (penalty jumps included)
};

InterpErrorRow measure_interpolation_error(const ProblemSpec& problem,
                                           const DGFunction& interpolant,
                                           const PenaltyScheme& penalties,
                                           const QuadratureRule& quad);

}  // namespace nipg

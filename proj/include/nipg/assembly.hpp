#pragma once

#include <span>
#include <vector>

#include "nipg/dg.hpp"
#include "nipg/penalty.hpp"
#include "nipg/problem.hpp"
#include "nipg/quadrature.hpp"

namespace nipg {

/// How the homogeneous Dirichlet data enters the discrete system.
/// WeakPenalty keeps the boundary face terms of the bilinear form with
/// sigma_0, sigma_N as given. StrongElimination drops the boundary face
/// terms and constrains the two boundary trace dofs to zero (the
/// sigma -> infinity limit of the penalty formulation).
enum class BoundaryTreatment { WeakPenalty, StrongElimination };

/// Block-tridiagonal system from the NIPG form: N diagonal blocks of size
/// (k+1), N-1 sub/super blocks. lower[e] couples block row e+1 to block e,
/// upper[e] couples block row e to block e+1. Entries are stored row-major
/// inside each block.
struct BlockTriSystem {
    DGSpace space;
    int block = 0;
    std::vector<double> diag;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> rhs;

    int num_blocks() const { return static_cast<int>(rhs.size()) / block; }
    double& D(int e, int p, int q) { return diag[(static_cast<size_t>(e) * block + p) * block + q]; }
    double& L(int e, int p, int q) { return lower[(static_cast<size_t>(e) * block + p) * block + q]; }
    double& U(int e, int p, int q) { return upper[(static_cast<size_t>(e) * block + p) * block + q]; }
    double D(int e, int p, int q) const { return diag[(static_cast<size_t>(e) * block + p) * block + q]; }
    double L(int e, int p, int q) const { return lower[(static_cast<size_t>(e) * block + p) * block + q]; }
    double U(int e, int p, int q) const { return upper[(static_cast<size_t>(e) * block + p) * block + q]; }
};

/// A[p][q] = a(phi_q, phi_p) with the nonsymmetric interior-penalty form:
/// volume terms eps^2 w'v' + c w v by quadrature, face terms
/// eps^2 <w'>_i [v]_i - eps^2 [w]_i <v'>_i + sigma_i [w]_i [v]_i.
BlockTriSystem assemble(const DGSpace& space, const ProblemSpec& problem,
                        const PenaltyScheme& penalties, const QuadratureRule& quad,
                        BoundaryTreatment boundary = BoundaryTreatment::WeakPenalty);

/// y = A x for the block-tridiagonal operator.
std::vector<double> apply(const BlockTriSystem& system, std::span<const double> x);

}  // namespace nipg

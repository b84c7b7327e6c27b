#pragma once

#include <vector>

#include "nipg/mesh.hpp"

namespace nipg {

/// Per-node penalty weights sigma_0 .. sigma_N, all positive.
struct PenaltyScheme {
    std::vector<double> sigma;

    int size() const { return static_cast<int>(sigma.size()); }
};

/// How max|psi'| enters the fine-region penalty on S-type meshes.
/// ExactMax evaluates the true maximum of |psi_1'| (4 ln N on the S-mesh,
/// 4(1 - 1/N) on BS, numeric for pS/mBS). TableAsymptotic uses the order
/// constants ln N, (ln N)^{1/m}, 1, 1; this is the convention the
/// reference result tables were produced with.
enum class PenaltyConvention { ExactMax, TableAsymptotic };

/// S-type meshes: sigma = eps at the boundary, eps*N on coarse-region
/// nodes, eps*N / max|psi'| on fine-region nodes (transition points
/// included). DL meshes: eps at the boundary, eps/H inside.
PenaltyScheme penalty_scheme(const Mesh1D& mesh, double eps,
                             PenaltyConvention convention = PenaltyConvention::ExactMax);

}  // namespace nipg

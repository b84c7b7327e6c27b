#include "nipg/penalty.hpp"

#include <stdexcept>

namespace nipg {

PenaltyScheme penalty_scheme(const Mesh1D& mesh, double eps,
                             PenaltyConvention convention) {
    if (eps <= 0.0) throw std::invalid_argument("penalty_scheme: eps must be positive");
    const int N = mesh.num_elements();
    PenaltyScheme scheme;
    scheme.sigma.assign(N + 1, eps);

    if (mesh.meta.variant.kind == MeshKind::DL) {
        if (mesh.meta.H <= 0.0)
            throw std::invalid_argument("penalty_scheme: DL mesh is missing H metadata");
        const double interior = eps / mesh.meta.H;
        for (int i = 1; i < N; ++i) scheme.sigma[i] = interior;
        return scheme;
    }

    const double psi = (convention == PenaltyConvention::ExactMax)
                           ? max_psi_prime(mesh.meta.variant, N)
                           : asymptotic_psi_prime(mesh.meta.variant, N);
    if (!(psi > 0.0))
        throw std::invalid_argument("penalty_scheme: invalid max|psi'|");
    const double coarse = eps * N;
    const double fine = eps * N / psi;
    for (int i = 1; i < N; ++i)
        scheme.sigma[i] = (mesh.region[i] == NodeRegion::Fine) ? fine : coarse;
    return scheme;
}

}  // namespace nipg

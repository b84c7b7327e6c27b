#include "nipg/assembly.hpp"

#include <stdexcept>

namespace nipg {

BlockTriSystem assemble(const DGSpace& space, const ProblemSpec& problem,
                        const PenaltyScheme& penalties, const QuadratureRule& quad,
                        BoundaryTreatment boundary) {
    const Mesh1D& mesh = *space.mesh;
    const int N = space.num_elements();
    const int nb = space.basis.size();
    if (penalties.size() != N + 1)
        throw std::invalid_argument("assemble: penalty scheme does not match the mesh");
    if (!problem.c || !problem.f)
        throw std::invalid_argument("assemble: problem needs c and f");

    const double eps = problem.epsilon;
    const double eps2 = eps * eps;
    const int nq = quad.size();

    BlockTriSystem sys{space, nb, {}, {}, {}, {}};
    sys.diag.assign(static_cast<size_t>(N) * nb * nb, 0.0);
    sys.lower.assign(static_cast<size_t>(N - 1) * nb * nb, 0.0);
    sys.upper.assign(static_cast<size_t>(N - 1) * nb * nb, 0.0);
    sys.rhs.assign(static_cast<size_t>(N) * nb, 0.0);

    // basis tabulated at quadrature points and at the endpoints
    std::vector<double> P(nb * nq), Dq(nb * nq);
    std::vector<double> vL(nb), vR(nb), dL(nb), dR(nb);
    for (int j = 0; j < nb; ++j) {
        for (int g = 0; g < nq; ++g) {
            P[j * nq + g] = space.basis.value(j, quad.points[g]);
            Dq[j * nq + g] = space.basis.derivative(j, quad.points[g]);
        }
        vL[j] = space.basis.value(j, -1.0);
        vR[j] = space.basis.value(j, 1.0);
        dL[j] = space.basis.derivative(j, -1.0);
        dR[j] = space.basis.derivative(j, 1.0);
    }

    // volume terms
    std::vector<double> cg(nq), fg(nq);
    for (int e = 0; e < N; ++e) {
        const double h = mesh.widths[e];
        for (int g = 0; g < nq; ++g) {
            const double xg = space.to_physical(e, quad.points[g]);
            cg[g] = problem.c(xg);
            fg[g] = problem.f(xg);
        }
        for (int p = 0; p < nb; ++p) {
            double load = 0.0;
            for (int q = 0; q < nb; ++q) {
                double stiff = 0.0, mass = 0.0;
                for (int g = 0; g < nq; ++g) {
                    stiff += quad.weights[g] * Dq[p * nq + g] * Dq[q * nq + g];
                    mass += quad.weights[g] * cg[g] * P[p * nq + g] * P[q * nq + g];
                }
                sys.D(e, p, q) += eps2 * (2.0 / h) * stiff + 0.5 * h * mass;
            }
            for (int g = 0; g < nq; ++g) load += quad.weights[g] * fg[g] * P[p * nq + g];
            sys.rhs[static_cast<size_t>(e) * nb + p] += 0.5 * h * load;
        }
    }

    // interface terms: J holds [phi], Dv holds <phi'> over the dofs of the
    // two adjacent elements (one element at the domain endpoints)
    std::vector<double> J(2 * nb), Dv(2 * nb);
    const bool weak = boundary == BoundaryTreatment::WeakPenalty;
    for (int i = 0; i <= N; ++i) {
        const bool at_boundary = (i == 0 || i == N);
        if (at_boundary && !weak) continue;
        const double sigma = penalties.sigma[i];

        int n_dofs;
        int el = -1, er = -1;
        if (i == 0) {
            n_dofs = nb;
            er = 0;
            for (int j = 0; j < nb; ++j) {
                J[j] = vL[j];
                Dv[j] = dL[j] * 2.0 / mesh.widths[0];
            }
        } else if (i == N) {
            n_dofs = nb;
            el = N - 1;
            for (int j = 0; j < nb; ++j) {
                J[j] = -vR[j];
                Dv[j] = dR[j] * 2.0 / mesh.widths[N - 1];
            }
        } else {
            n_dofs = 2 * nb;
            el = i - 1;
            er = i;
            for (int j = 0; j < nb; ++j) {
                J[j] = -vR[j];
                Dv[j] = 0.5 * dR[j] * 2.0 / mesh.widths[el];
                J[nb + j] = vL[j];
                Dv[nb + j] = 0.5 * dL[j] * 2.0 / mesh.widths[er];
            }
        }

        auto scatter = [&](int p, int q, double value) {
            // local index -> (element, local dof)
            const int ep = (el >= 0 && p < nb) ? el : er;
            const int eq = (el >= 0 && q < nb) ? el : er;
            const int lp = (el >= 0 && p < nb) ? p : p - (el >= 0 ? nb : 0);
            const int lq = (el >= 0 && q < nb) ? q : q - (el >= 0 ? nb : 0);
            if (ep == eq) sys.D(ep, lp, lq) += value;
            else if (ep < eq) sys.U(ep, lp, lq) += value;
            else sys.L(eq, lp, lq) += value;
        };

        for (int p = 0; p < n_dofs; ++p)
            for (int q = 0; q < n_dofs; ++q)
                scatter(p, q, eps2 * J[p] * Dv[q] - eps2 * Dv[p] * J[q] +
                                  sigma * J[p] * J[q]);
    }

    if (!weak) {
        // constrain the two boundary trace dofs (basis is nodal at the
        // endpoints, so these are local dof 0 of the first element and
        // local dof nb-1 of the last one)
        auto eliminate = [&](int e, int j) {
            for (int q = 0; q < nb; ++q) sys.D(e, j, q) = 0.0;
            for (int p = 0; p < nb; ++p) sys.D(e, p, j) = 0.0;
            sys.D(e, j, j) = 1.0;
            if (e + 1 < N)
                for (int p = 0; p < nb; ++p) sys.L(e, p, j) = 0.0;  // col in row block e+1
            if (e + 1 < N)
                for (int q = 0; q < nb; ++q) sys.U(e, j, q) = 0.0;  // row toward block e+1
            if (e > 0)
                for (int q = 0; q < nb; ++q) sys.L(e - 1, j, q) = 0.0;  // row toward block e-1
            if (e > 0)
                for (int p = 0; p < nb; ++p) sys.U(e - 1, p, j) = 0.0;  // col in row block e-1
            sys.rhs[static_cast<size_t>(e) * nb + j] = 0.0;
        };
        eliminate(0, 0);
        eliminate(N - 1, nb - 1);
    }

    return sys;
}

std::vector<double> apply(const BlockTriSystem& sys, std::span<const double> x) {
    const int N = sys.num_blocks();
    const int nb = sys.block;
    if (static_cast<int>(x.size()) != N * nb)
        throw std::invalid_argument("apply: dimension mismatch");
    std::vector<double> y(x.size(), 0.0);
    for (int e = 0; e < N; ++e) {
        for (int p = 0; p < nb; ++p) {
            double acc = 0.0;
            for (int q = 0; q < nb; ++q) acc += sys.D(e, p, q) * x[e * nb + q];
            if (e > 0)
                for (int q = 0; q < nb; ++q) acc += sys.L(e - 1, p, q) * x[(e - 1) * nb + q];
            if (e < N - 1)
                for (int q = 0; q < nb; ++q) acc += sys.U(e, p, q) * x[(e + 1) * nb + q];
            y[e * nb + p] = acc;
        }
    }
    return y;
}

}  // namespace nipg

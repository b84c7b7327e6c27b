#include "nipg/dg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nipg {

DGSpace make_space(Mesh1D mesh, int degree) {
    return make_space(std::make_shared<const Mesh1D>(std::move(mesh)), degree);
}

DGSpace make_space(std::shared_ptr<const Mesh1D> mesh, int degree) {
    if (!mesh || mesh->num_elements() < 1)
        throw std::invalid_argument("make_space: empty mesh");
    return DGSpace{std::move(mesh), LocalBasis(degree)};
}

DGFunction make_dg_function(DGSpace space) {
    const size_t n = static_cast<size_t>(space.num_dofs());
    return DGFunction{std::move(space), std::vector<double>(n, 0.0)};
}

namespace {

EvalResult eval_on_element(const DGFunction& fn, int e, double x) {
    const DGSpace& sp = fn.space;
    const double h = sp.element_width(e);
    double t = 2.0 * (x - sp.element_left(e)) / h - 1.0;
    t = std::clamp(t, -1.0, 1.0);
    const int nb = sp.basis.size();
    double v = 0.0, d = 0.0;
    for (int j = 0; j < nb; ++j) {
        const double cj = fn.coefficients[sp.dof(e, j)];
        v += cj * sp.basis.value(j, t);
        d += cj * sp.basis.derivative(j, t);
    }
    return {v, d * 2.0 / h};
}

}  // namespace

EvalResult dg_eval(const DGFunction& fn, double x, TraceSide side) {
    const Mesh1D& mesh = *fn.space.mesh;
    const int N = mesh.num_elements();
    if (x < mesh.nodes.front() || x > mesh.nodes.back())
        throw std::invalid_argument("dg_eval: x outside [0, 1]");

    const auto it = std::lower_bound(mesh.nodes.begin(), mesh.nodes.end(), x);
    const int idx = static_cast<int>(it - mesh.nodes.begin());
    if (idx <= N && mesh.nodes[idx] == x) {
        // exact node hit: pick the element according to the trace side
        if (side == TraceSide::Left) {
            if (idx == 0) throw std::invalid_argument("dg_eval: left trace at x_0");
            return eval_on_element(fn, idx - 1, x);
        }
        if (side == TraceSide::Right) {
            if (idx == N) throw std::invalid_argument("dg_eval: right trace at x_N");
            return eval_on_element(fn, idx, x);
        }
        if (idx == 0) return eval_on_element(fn, 0, x);
        if (idx == N) return eval_on_element(fn, N - 1, x);
        throw std::invalid_argument("dg_eval: trace side required at an interior mesh node");
    }
    return eval_on_element(fn, std::clamp(idx - 1, 0, N - 1), x);
}

JumpAverage jump_and_average(const DGFunction& fn, int node) {
    const int N = fn.space.num_elements();
    if (node < 0 || node > N)
        throw std::invalid_argument("jump_and_average: node index out of range");
    const double x = fn.space.mesh->nodes[node];
    if (node == 0) {
        const double v = dg_eval(fn, x, TraceSide::Right).value;
        return {v, v};
    }
    if (node == N) {
        const double v = dg_eval(fn, x, TraceSide::Left).value;
        return {-v, v};
    }
    const double left = dg_eval(fn, x, TraceSide::Left).value;
    const double right = dg_eval(fn, x, TraceSide::Right).value;
    return {right - left, 0.5 * (right + left)};
}

}  // namespace nipg

#pragma once

#include <memory>
#include <vector>

#include "nipg/basis.hpp"
#include "nipg/mesh.hpp"

namespace nipg {

/// Broken polynomial space: degree-k Lagrange polynomials per element, no
/// continuity between elements. Dofs are element-major: element e owns
/// indices e*(k+1) .. e*(k+1)+k.
struct DGSpace {
    std::shared_ptr<const Mesh1D> mesh;
    LocalBasis basis;

    int degree() const { return basis.degree(); }
    int num_elements() const { return mesh->num_elements(); }
    int num_dofs() const { return num_elements() * basis.size(); }
    int dof(int element, int j) const { return element * basis.size() + j; }

    double element_left(int e) const { return mesh->nodes[e]; }
    double element_width(int e) const { return mesh->widths[e]; }
    /// Reference coordinate t in [-1,1] -> physical x in element e.
    double to_physical(int e, double t) const {
        return mesh->nodes[e] + 0.5 * (t + 1.0) * mesh->widths[e];
    }
};

DGSpace make_space(Mesh1D mesh, int degree);
DGSpace make_space(std::shared_ptr<const Mesh1D> mesh, int degree);

struct DGFunction {
    DGSpace space;
    std::vector<double> coefficients;
};

/// Coefficient vector interpreted in the element-local Lagrange basis.
DGFunction make_dg_function(DGSpace space);

enum class TraceSide { Left, Right, Interior };

struct EvalResult {
    double value;
    double derivative;
};

/// Value and spatial derivative of the piecewise polynomial at x. At an
/// interior mesh node the one-sided trace must be selected explicitly;
/// TraceSide::Interior is rejected there. A left trace at x_0 or a right
/// trace at x_N is rejected.
EvalResult dg_eval(const DGFunction& fn, double x,
                   TraceSide side = TraceSide::Interior);

struct JumpAverage {
    double jump;
    double average;
};

/// [v]_i, <v>_i with the boundary conventions [v]_0 = <v>_0 = v(x_0+0)
/// and [v]_N = -<v>_N = -v(x_N-0).
JumpAverage jump_and_average(const DGFunction& fn, int node);

}  // namespace nipg

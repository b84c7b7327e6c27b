#include "nipg/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nipg {

namespace {

// LU with partial pivoting for the small dense blocks (n <= 4).
struct SmallLU {
    int n = 0;
    std::vector<double> a;   // factored, row-major
    std::vector<int> piv;

    void factor(const double* src, int size) {
        n = size;
        a.assign(src, src + n * n);
        piv.resize(n);
        for (int col = 0; col < n; ++col) {
            int p = col;
            for (int r = col + 1; r < n; ++r)
                if (std::abs(a[r * n + col]) > std::abs(a[p * n + col])) p = r;
            piv[col] = p;
            if (p != col)
                for (int q = 0; q < n; ++q) std::swap(a[col * n + q], a[p * n + q]);
            const double d = a[col * n + col];
            if (d == 0.0) throw std::runtime_error("block Thomas: singular block pivot");
            for (int r = col + 1; r < n; ++r) {
                const double m = a[r * n + col] / d;
                a[r * n + col] = m;
                for (int q = col + 1; q < n; ++q) a[r * n + q] -= m * a[col * n + q];
            }
        }
    }

    void solve(double* b) const {
        for (int col = 0; col < n; ++col) {
            if (piv[col] != col) std::swap(b[col], b[piv[col]]);
            for (int r = col + 1; r < n; ++r) b[r] -= a[r * n + col] * b[col];
        }
        for (int r = n - 1; r >= 0; --r) {
            for (int q = r + 1; q < n; ++q) b[r] -= a[r * n + q] * b[q];
            b[r] /= a[r * n + r];
        }
    }

    // X = M * inv(A) for an nxn block M, via A^T-free column solves of
    // inv(A) and a multiply.
    void right_inverse_apply(const double* m, double* x) const {
        std::vector<double> inv(n * n, 0.0);
        std::vector<double> col(n);
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) col[r] = (r == c) ? 1.0 : 0.0;
            solve(col.data());
            for (int r = 0; r < n; ++r) inv[r * n + c] = col[r];
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                double acc = 0.0;
                for (int q = 0; q < n; ++q) acc += m[r * n + q] * inv[q * n + c];
                x[r * n + c] = acc;
            }
    }
};

}  // namespace

DGFunction solve(const BlockTriSystem& sys) {
    const int N = sys.num_blocks();
    const int nb = sys.block;
    const size_t bs = static_cast<size_t>(nb) * nb;

    std::vector<double> dt(sys.diag);   // modified diagonal blocks
    std::vector<double> bt(sys.rhs);    // modified right-hand side
    std::vector<SmallLU> factors(N);
    std::vector<double> w(bs);

    factors[0].factor(dt.data(), nb);
    for (int e = 1; e < N; ++e) {
        // W = L_{e-1} * inv(Dt_{e-1}); Dt_e -= W U_{e-1}; bt_e -= W bt_{e-1}
        factors[e - 1].right_inverse_apply(&sys.lower[(e - 1) * bs], w.data());
        double* de = &dt[e * bs];
        const double* ue = &sys.upper[(e - 1) * bs];
        for (int p = 0; p < nb; ++p)
            for (int q = 0; q < nb; ++q) {
                double acc = 0.0;
                for (int r = 0; r < nb; ++r) acc += w[p * nb + r] * ue[r * nb + q];
                de[p * nb + q] -= acc;
            }
        for (int p = 0; p < nb; ++p) {
            double acc = 0.0;
            for (int r = 0; r < nb; ++r) acc += w[p * nb + r] * bt[(e - 1) * nb + r];
            bt[e * nb + p] -= acc;
        }
        factors[e].factor(de, nb);
    }

    DGFunction u = make_dg_function(sys.space);
    std::vector<double> rhs_block(nb);
    for (int e = N - 1; e >= 0; --e) {
        for (int p = 0; p < nb; ++p) rhs_block[p] = bt[e * nb + p];
        if (e < N - 1) {
            const double* ue = &sys.upper[e * bs];
            for (int p = 0; p < nb; ++p) {
                double acc = 0.0;
                for (int q = 0; q < nb; ++q) acc += ue[p * nb + q] * u.coefficients[(e + 1) * nb + q];
                rhs_block[p] -= acc;
            }
        }
        factors[e].solve(rhs_block.data());
        for (int p = 0; p < nb; ++p) u.coefficients[e * nb + p] = rhs_block[p];
    }
    return u;
}

double relative_residual(const BlockTriSystem& sys, std::span<const double> x) {
    const std::vector<double> ax = apply(sys, x);
    double rn = 0.0, bn = 0.0;
    for (size_t i = 0; i < ax.size(); ++i) {
        const double r = ax[i] - sys.rhs[i];
        rn += r * r;
        bn += sys.rhs[i] * sys.rhs[i];
    }
    return bn > 0.0 ? std::sqrt(rn / bn) : std::sqrt(rn);
}

}  // namespace nipg

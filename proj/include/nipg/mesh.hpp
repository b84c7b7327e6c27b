#pragma once

#include <string>
#include <string_view>
#include <optional>
#include <vector>

namespace nipg {

enum class MeshKind { S, PS, BS, MBS, DL };

/// Layer-adapted mesh family selector. `grading_exponent` is the pS-mesh
/// exponent m > 1; ignored by the other kinds. The mBS parameter
/// q = 1/2 + 1/(2 ln N) is recomputed per N, not stored here.
struct MeshVariant {
    MeshKind kind = MeshKind::S;
    double grading_exponent = 3.0;

    static MeshVariant s() { return {MeshKind::S}; }
    static MeshVariant ps(double m = 3.0) { return {MeshKind::PS, m}; }
    static MeshVariant bs() { return {MeshKind::BS}; }
    static MeshVariant mbs() { return {MeshKind::MBS}; }
    static MeshVariant dl() { return {MeshKind::DL}; }
};

const char* to_string(MeshKind kind);
std::optional<MeshKind> parse_mesh_kind(std::string_view token);

enum class NodeRegion : unsigned char { Boundary, Fine, Coarse };

struct MeshMeta {
    MeshVariant variant;
    double epsilon = 0.0;
    double gamma = 1.0;
    int degree = 1;              // k used in the transition parameter
    // S-type fields
    double lambda = 0.0;
    bool lambda_clamped = false;
    double max_psi_prime = 0.0;  // exact max of |psi_1'| on [0, 1/4]
    // DL fields
    double H = 0.0;
    int M = 0;
    int ell = 0;
    bool omitted_point = false;
};

/// 1D mesh on [0,1]: N elements I_i = (nodes[i-1], nodes[i]).
/// widths[i] = nodes[i+1] - nodes[i] (0-based elements), region has one
/// tag per node.
struct Mesh1D {
    std::vector<double> nodes;
    std::vector<double> widths;
    std::vector<NodeRegion> region;
    MeshMeta meta;

    int num_elements() const { return static_cast<int>(widths.size()); }
    int num_nodes() const { return static_cast<int>(nodes.size()); }
};

/// Shishkin transition parameter min(1/4, (k+1)(eps/gamma) ln N).
/// N must be >= 4 and divisible by 4.
double transition_parameter(int N, double eps, double gamma, int k);

/// Exact max of |psi_1'(t)| over t in [0, 1/4] for the S-type
/// characterizing functions: closed form for S and BS, dense sampling
/// plus golden-section refinement for pS and mBS.
double max_psi_prime(const MeshVariant& variant, int N);

/// The Table-1 order constants with C = 1: ln N (S), (ln N)^{1/m} (pS),
/// 1 (BS, mBS). Used by the table-asymptotic penalty convention.
double asymptotic_psi_prime(const MeshVariant& variant, int N);

/// q = 1/2 + 1/(2 ln N); in (1/2, 1) for N >= 4.
double mbs_q(int N);

Mesh1D build_stype_mesh(const MeshVariant& variant, int N, double eps,
                        double gamma, int k);

/// Duran-Lombardi graded mesh: uniform cells of width H*eps up to
/// ell = floor(1/H), then x_i = (1+H) x_{i-1} until 1/2 is reached,
/// mirrored onto [1/2, 1]. The points x_{M-1}, x_{M+1} are omitted when
/// h_M < kDlOmissionRatio * h_{M-1}.
Mesh1D build_dl_mesh(double H, double eps);

/// Omission threshold calibrated against the reference node counts
/// {70, 128, 240, 468, 920, 1828} for eps = 2^-20, H = 2^-1..2^-6.
inline constexpr double kDlOmissionRatio = 0.02;

struct ValidationCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
    std::string summary() const;
};

ValidationReport validate_mesh(const Mesh1D& mesh);

}  // namespace nipg

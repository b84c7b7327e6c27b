#include "nipg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nipg {

const char* to_string(MeshKind kind) {
    switch (kind) {
        case MeshKind::S: return "s";
        case MeshKind::PS: return "ps";
        case MeshKind::BS: return "bs";
        case MeshKind::MBS: return "mbs";
        case MeshKind::DL: return "dl";
    }
    return "?";
}

std::optional<MeshKind> parse_mesh_kind(std::string_view token) {
    if (token == "s") return MeshKind::S;
    if (token == "ps") return MeshKind::PS;
    if (token == "bs") return MeshKind::BS;
    if (token == "mbs") return MeshKind::MBS;
    if (token == "dl") return MeshKind::DL;
    return std::nullopt;
}

double mbs_q(int N) {
    return 0.5 + 1.0 / (2.0 * std::log(static_cast<double>(N)));
}

namespace {

void require_stype_N(int N) {
    if (N < 4 || N % 4 != 0)
        throw std::invalid_argument("S-type mesh needs N >= 4 divisible by 4, got N = " +
                                    std::to_string(N));
}

// phi_1 = -ln psi_1 from the characterizing functions; phi_1(1/4) = ln N.
double phi1(const MeshVariant& variant, int N, double t) {
    const double lnN = std::log(static_cast<double>(N));
    switch (variant.kind) {
        case MeshKind::S:
            return 4.0 * t * lnN;
        case MeshKind::PS:
            return std::pow(4.0 * t, variant.grading_exponent) * lnN;
        case MeshKind::BS:
            return -std::log(1.0 - 4.0 * (1.0 - 1.0 / N) * t);
        case MeshKind::MBS:
            return 2.0 * t / (mbs_q(N) - 2.0 * t);
        default:
            throw std::invalid_argument("phi1: not an S-type variant");
    }
}

// |psi_1'(t)| for the numeric maximization (pS, mBS).
double abs_psi_prime(const MeshVariant& variant, int N, double t) {
    const double lnN = std::log(static_cast<double>(N));
    switch (variant.kind) {
        case MeshKind::PS: {
            const double m = variant.grading_exponent;
            const double s = 4.0 * t;
            return 4.0 * m * lnN * std::pow(s, m - 1.0) * std::exp(-std::pow(s, m) * lnN);
        }
        case MeshKind::MBS: {
            const double q = mbs_q(N);
            const double d = q - 2.0 * t;
            return 2.0 * q / (d * d) * std::exp(-2.0 * t / d);
        }
        default:
            throw std::invalid_argument("abs_psi_prime: closed form available");
    }
}

double maximize_psi_prime(const MeshVariant& variant, int N) {
    constexpr int kSamples = 100000;
    double best_t = 0.0, best = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        const double t = 0.25 * i / kSamples;
        const double v = abs_psi_prime(variant, N, t);
        if (v > best) { best = v; best_t = t; }
    }
    // golden-section polish around the grid maximizer
    const double step = 0.25 / kSamples;
    double a = std::max(0.0, best_t - step), b = std::min(0.25, best_t + step);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = abs_psi_prime(variant, N, c), fd = abs_psi_prime(variant, N, d);
    for (int it = 0; it < 80; ++it) {
        if (fc > fd) { b = d; d = c; fd = fc; c = b - gr * (b - a); fc = abs_psi_prime(variant, N, c); }
        else         { a = c; c = d; fc = fd; d = a + gr * (b - a); fd = abs_psi_prime(variant, N, d); }
    }
    return std::max(best, std::max(fc, fd));
}

// max |phi_1'| on [0, 1/4], closed forms; used by validate_mesh only.
double max_phi_prime(const MeshVariant& variant, int N) {
    const double lnN = std::log(static_cast<double>(N));
    switch (variant.kind) {
        case MeshKind::S: return 4.0 * lnN;
        case MeshKind::PS: return 4.0 * variant.grading_exponent * lnN;
        case MeshKind::BS: return 4.0 * (N - 1.0);
        case MeshKind::MBS: {
            const double q = mbs_q(N);
            return 2.0 * q * (2.0 * lnN) * (2.0 * lnN);
        }
        default: throw std::invalid_argument("max_phi_prime: not an S-type variant");
    }
}

}  // namespace

double transition_parameter(int N, double eps, double gamma, int k) {
    require_stype_N(N);
    if (eps <= 0.0 || gamma <= 0.0 || k < 1)
        throw std::invalid_argument("transition_parameter: need eps > 0, gamma > 0, k >= 1");
    const double lam = (k + 1) * (eps / gamma) * std::log(static_cast<double>(N));
    return std::min(0.25, lam);
}

double max_psi_prime(const MeshVariant& variant, int N) {
    if (N < 4) throw std::invalid_argument("max_psi_prime: N >= 4 required");
    const double lnN = std::log(static_cast<double>(N));
    switch (variant.kind) {
        case MeshKind::S: return 4.0 * lnN;
        case MeshKind::BS: return 4.0 * (1.0 - 1.0 / N);
        case MeshKind::PS:
        case MeshKind::MBS: return maximize_psi_prime(variant, N);
        default: throw std::invalid_argument("max_psi_prime: not an S-type variant");
    }
}

double asymptotic_psi_prime(const MeshVariant& variant, int N) {
    if (N < 4) throw std::invalid_argument("asymptotic_psi_prime: N >= 4 required");
    const double lnN = std::log(static_cast<double>(N));
    switch (variant.kind) {
        case MeshKind::S: return lnN;
        case MeshKind::PS: return std::pow(lnN, 1.0 / variant.grading_exponent);
        case MeshKind::BS:
        case MeshKind::MBS: return 1.0;
        default: throw std::invalid_argument("asymptotic_psi_prime: not an S-type variant");
    }
}

Mesh1D build_stype_mesh(const MeshVariant& variant, int N, double eps,
                        double gamma, int k) {
    require_stype_N(N);
    if (variant.kind == MeshKind::DL)
        throw std::invalid_argument("build_stype_mesh: use build_dl_mesh for the DL mesh");
    if (variant.kind == MeshKind::PS && variant.grading_exponent <= 1.0)
        throw std::invalid_argument("build_stype_mesh: pS mesh needs m > 1");

    Mesh1D mesh;
    const double lnN = std::log(static_cast<double>(N));
    const double unclamped = (k + 1) * (eps / gamma) * lnN;
    const bool clamped = unclamped >= 0.25;
    const double lambda = clamped ? 0.25 : unclamped;
    // With scale = lambda / ln N the generator always anchors x_{N/4} at
    // lambda; in the unclamped case this equals (k+1) eps / gamma.
    const double scale = lambda / lnN;

    mesh.nodes.assign(N + 1, 0.0);
    for (int i = 0; i <= N / 4; ++i)
        mesh.nodes[i] = scale * phi1(variant, N, static_cast<double>(i) / N);
    mesh.nodes[N / 4] = lambda;
    for (int i = N / 4 + 1; i <= N / 2; ++i)
        mesh.nodes[i] = lambda + 2.0 * (1.0 - 2.0 * lambda) * (static_cast<double>(i) / N - 0.25);
    mesh.nodes[N / 2] = 0.5;
    for (int i = N / 2 + 1; i <= N; ++i)
        mesh.nodes[i] = 1.0 - mesh.nodes[N - i];

    mesh.widths.resize(N);
    for (int i = 0; i < N; ++i) mesh.widths[i] = mesh.nodes[i + 1] - mesh.nodes[i];

    mesh.region.assign(N + 1, NodeRegion::Coarse);
    mesh.region[0] = mesh.region[N] = NodeRegion::Boundary;
    for (int i = 1; i <= N / 4; ++i) mesh.region[i] = NodeRegion::Fine;
    for (int i = 3 * N / 4; i < N; ++i) mesh.region[i] = NodeRegion::Fine;

    mesh.meta.variant = variant;
    mesh.meta.epsilon = eps;
    mesh.meta.gamma = gamma;
    mesh.meta.degree = k;
    mesh.meta.lambda = lambda;
    mesh.meta.lambda_clamped = clamped;
    mesh.meta.max_psi_prime = max_psi_prime(variant, N);
    return mesh;
}

Mesh1D build_dl_mesh(double H, double eps) {
    if (H <= 0.0 || H >= 1.0)
        throw std::invalid_argument("build_dl_mesh: H must lie in (0, 1)");
    if (eps <= 0.0 || H * eps >= 0.5)
        throw std::invalid_argument("build_dl_mesh: need eps > 0 and H*eps < 1/2");

    const int ell = static_cast<int>(std::floor(1.0 / H));
    std::vector<double> left{0.0};
    int M = 0;
    for (int i = 1;; ++i) {
        const double cand = (i <= ell) ? i * H * eps : (1.0 + H) * left.back();
        if (cand >= 0.5) {
            M = i;
            left.push_back(0.5);
            break;
        }
        left.push_back(cand);
    }

    bool omitted = false;
    if (M >= 2) {
        const double hM = left[M] - left[M - 1];
        const double hM1 = left[M - 1] - left[M - 2];
        if (hM < kDlOmissionRatio * hM1) {
            left.erase(left.begin() + (M - 1));
            omitted = true;
        }
    }

    Mesh1D mesh;
    mesh.nodes = left;
    for (int i = static_cast<int>(left.size()) - 2; i >= 0; --i)
        mesh.nodes.push_back(1.0 - left[i]);

    const int N = static_cast<int>(mesh.nodes.size()) - 1;
    mesh.widths.resize(N);
    for (int i = 0; i < N; ++i) mesh.widths[i] = mesh.nodes[i + 1] - mesh.nodes[i];

    mesh.region.assign(N + 1, NodeRegion::Coarse);
    mesh.region[0] = mesh.region[N] = NodeRegion::Boundary;
    for (int i = 1; i <= std::min(ell, N - 1); ++i) {
        mesh.region[i] = NodeRegion::Fine;
        mesh.region[N - i] = NodeRegion::Fine;
    }

    mesh.meta.variant = MeshVariant::dl();
    mesh.meta.epsilon = eps;
    mesh.meta.H = H;
    mesh.meta.M = M;
    mesh.meta.ell = ell;
    mesh.meta.omitted_point = omitted;
    return mesh;
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.pass ? "ok   " : "FAIL ") << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return out.str();
}

ValidationReport validate_mesh(const Mesh1D& mesh) {
    ValidationReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    char buf[128];

    const int N = mesh.num_elements();
    if (N < 1 || mesh.num_nodes() != N + 1 ||
        static_cast<int>(mesh.region.size()) != N + 1) {
        add("shape", false, "inconsistent node/width/region sizes");
        return report;
    }

    add("endpoints", mesh.nodes.front() == 0.0 && mesh.nodes.back() == 1.0);

    bool monotone = true;
    for (int i = 0; i < N; ++i)
        if (!(mesh.widths[i] > 0.0) ||
            mesh.widths[i] != mesh.nodes[i + 1] - mesh.nodes[i])
            monotone = false;
    add("monotone-widths", monotone);

    double sum = 0.0;
    for (double h : mesh.widths) sum += h;
    std::snprintf(buf, sizeof buf, "sum(h) = %.17g", sum);
    add("width-sum", std::abs(sum - 1.0) <= 1e-12, buf);

    double sym = 0.0;
    for (int i = 0; i <= N; ++i)
        sym = std::max(sym, std::abs(mesh.nodes[N - i] - (1.0 - mesh.nodes[i])));
    std::snprintf(buf, sizeof buf, "max |x_{N-i} - (1 - x_i)| = %.3g", sym);
    add("symmetry", sym <= 1e-12, buf);

    const MeshKind kind = mesh.meta.variant.kind;
    if (kind != MeshKind::DL) {
        if (N % 4 != 0) {
            add("stype-shape", false, "N not divisible by 4");
            return report;
        }
        const double lambda = mesh.meta.lambda;
        const double tol = 1e-12 * std::max(1.0, lambda);
        add("transition-anchors",
            std::abs(mesh.nodes[N / 4] - lambda) <= tol &&
                std::abs(mesh.nodes[3 * N / 4] - (1.0 - lambda)) <= 1e-12);

        bool coarse_ok = true;
        double lo = 1.0, hi = 0.0;
        for (int i = N / 4; i < 3 * N / 4; ++i) {
            const double nh = N * mesh.widths[i];
            lo = std::min(lo, nh);
            hi = std::max(hi, nh);
            if (nh < 1.0 - 1e-9 || nh > 2.0 + 1e-9) coarse_ok = false;
        }
        std::snprintf(buf, sizeof buf, "N*h in [%.6g, %.6g]", lo, hi);
        add("coarse-width-bounds", coarse_ok, buf);

        // h_i <= scale * max|phi'| / N on the fine region (mean value bound).
        const double scale = mesh.meta.lambda / std::log(static_cast<double>(N));
        const double upper = scale * max_phi_prime(mesh.meta.variant, N) / N;
        bool fine_ok = true;
        double min_fine = upper;
        for (int i = 0; i < N; ++i) {
            const bool fine = i < N / 4 || i >= 3 * N / 4;
            if (!fine) continue;
            if (mesh.widths[i] > upper * (1.0 + 1e-9)) fine_ok = false;
            min_fine = std::min(min_fine, mesh.widths[i]);
        }
        add("fine-width-upper", fine_ok);
        // The lower bound in the min-spacing condition carries an
        // unspecified constant; report the measured ratio instead of
        // judging it (the pS mesh genuinely violates any fixed constant).
        std::snprintf(buf, sizeof buf, "min fine h / (scale/N) = %.6g",
                      min_fine / (scale / N));
        add("fine-width-lower-ratio", true, buf);
    } else {
        const double H = mesh.meta.H;
        const double he = H * mesh.meta.epsilon;
        bool bounds_ok = true;
        for (int i = 0; i < N; ++i)
            if (mesh.widths[i] < 0.5 * he * (1.0 - 1e-9) ||
                mesh.widths[i] > H * (1.0 + 1e-9))
                bounds_ok = false;
        add("dl-width-bounds", bounds_ok, "C*H*eps <= h_i <= H with C = 1/2");

        // graded half: h_i <= H x_{i-1}; the merged center cell of an
        // omitted mesh is exempt.
        bool growth_ok = true;
        const int center = N / 2;
        const int skip_from = mesh.meta.omitted_point ? center - 1 : center;
        for (int i = mesh.meta.ell; i < skip_from; ++i)
            if (mesh.widths[i] > H * mesh.nodes[i] * (1.0 + 1e-9)) growth_ok = false;
        add("dl-growth", growth_ok, "h_{i+1} <= H x_i on the graded left half");
    }

    return report;
}

}  // namespace nipg

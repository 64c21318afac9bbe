// Named solution families:
//
//   rd        R_d = (I⊗F_d)·C²_{X,d}·(I⊗F_d†), the diagonal aYBE solution in
//             every dimension (R_d·P then solves the bYBE)
//   kl1..kl3  the three exactly universal 4×4 bYBE solutions
//   rx        the 8×8 X-shape solution to the (2,3,2)-gYBE
//   x1..x7    the X-shaped (2,3,2)-gYBE families in parameters α, β, γ, δ,
//             with a global scale λ (x6, x7 are never invertible)

#pragma once

#include <array>
#include <string>

#include "ybx/matrix.hpp"
#include "ybx/verify.hpp"

namespace ybx {

enum class Family { Rd, KL1, KL2, KL3, RX, X1, X2, X3, X4, X5, X6, X7 };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Rd: return "rd";
        case Family::KL1: return "kl1";
        case Family::KL2: return "kl2";
        case Family::KL3: return "kl3";
        case Family::RX: return "rx";
        case Family::X1: return "x1";
        case Family::X2: return "x2";
        case Family::X3: return "x3";
        case Family::X4: return "x4";
        case Family::X5: return "x5";
        case Family::X6: return "x6";
        case Family::X7: return "x7";
    }
    return "?";
}

inline Family family_from_string(const std::string& name) {
    static const std::array<Family, 12> all = {Family::Rd, Family::KL1, Family::KL2, Family::KL3,
                                               Family::RX, Family::X1,  Family::X2,  Family::X3,
                                               Family::X4, Family::X5,  Family::X6,  Family::X7};
    for (Family f : all)
        if (name == to_string(f)) return f;
    throw std::invalid_argument("unknown family name: " + name);
}

struct FamilyParams {
    Family family = Family::Rd;
    int d = 2;  // rd only
    cplx alpha{1.0, 0.0};
    cplx beta{1.0, 0.0};
    cplx gamma{1.0, 0.0};
    cplx delta{1.0, 0.0};
    cplx lambda{1.0, 0.0};  // global scale
};

// ── R_d and the Kauffman–Lomonaco matrices ──────────────────────────────────

// Closed form: block diagonal (I_d, diag(ω^k, k=0..d−1), I_d, …, I_d), the
// second block being F_d·X_d·F_d† in F_d-column eigenvalue order.  Tests pin
// this against the explicit (I⊗F_d)·C²_{X,d}·(I⊗F_d†) product.
inline CMat build_rd(int d) {
    if (d < 2) throw std::invalid_argument("build_rd: d must be at least 2");
    CMat r(d * d, d * d);
    for (int b = 0; b < d; ++b)
        for (int k = 0; k < d; ++k)
            r(b * d + k, b * d + k) = (b == 1) ? root_of_unity(d, k) : cplx{1.0, 0.0};
    return r;
}

inline CMat build_kl(int which) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 1:
            return CMat(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        case 2:
            return CMat(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1});
        case 3:
            return CMat(4, 4, {s, 0, 0, s, 0, s, s, 0, 0, s, -s, 0, -s, 0, 0, s});
    }
    throw std::invalid_argument("build_kl: which must be 1, 2 or 3");
}

inline CMat build_rx() {
    const double s = 1.0 / std::sqrt(2.0);
    CMat r(8, 8);
    for (int i = 0; i < 8; ++i) {
        r(i, i) = s;
        r(i, 7 - i) = (i < 4) ? s : -s;  // lower half carries the −1/√2
    }
    return r;
}

// ── X-shaped families ───────────────────────────────────────────────────────

namespace detail {

// cells of the 8×8 X-shape, 0-based: (diag k, anti-diag k) for k = 0..7
struct XShapeEntries {
    std::array<cplx, 8> diag;  // r11, r22, …, r88
    std::array<cplx, 8> anti;  // r18, r27, r36, r45, r54, r63, r72, r81
};

inline void require_nonzero(const cplx& z, const char* what) {
    if (z == cplx{0.0, 0.0})
        throw std::invalid_argument(std::string("build_x_family: ") + what + " must be nonzero");
}

inline CMat assemble_xshape(const XShapeEntries& e, const cplx& lambda) {
    CMat m(8, 8);
    static const char* cell_names[] = {"r11", "r22", "r33", "r44", "r55", "r66", "r77", "r88",
                                       "r18", "r27", "r36", "r45", "r54", "r63", "r72", "r81"};
    for (int k = 0; k < 8; ++k) {
        const cplx dv = e.diag[k];
        const cplx av = e.anti[k];
        if (dv == cplx{0.0, 0.0})
            throw std::invalid_argument(std::string("build_x_family: entry ") + cell_names[k] +
                                        " vanishes for these parameters (X-shape broken)");
        if (av == cplx{0.0, 0.0})
            throw std::invalid_argument(std::string("build_x_family: entry ") + cell_names[8 + k] +
                                        " vanishes for these parameters (X-shape broken)");
        m(k, k) = lambda * dv;
        m(k, 7 - k) = lambda * av;
    }
    if (!m.all_finite()) throw std::invalid_argument("build_x_family: non-finite entry");
    return m;
}

}  // namespace detail

inline CMat build_x_family(const FamilyParams& p) {
    const cplx a = p.alpha, b = p.beta, g = p.gamma, dl = p.delta;
    const cplx i{0.0, 1.0};
    detail::require_nonzero(p.lambda, "lambda");
    detail::require_nonzero(a, "alpha");
    detail::require_nonzero(b, "beta");
    detail::XShapeEntries e;
    switch (p.family) {
        case Family::X1: {
            detail::require_nonzero(dl, "delta");
            const cplx d2 = dl * dl;
            e.diag = {dl, 1, dl, 1, 1, dl, 1, dl};
            e.anti = {a * b * b / d2, b, a, d2 / b, b, 1.0 / a, d2 / b, d2 / (a * b * b)};
            break;
        }
        case Family::X2: {
            e.diag = {-i, 1, 1, -i, 1, -i, -i, 1};
            e.anti = {i * a * b * b, b, a, i / b, b, i / a, i / b, 1.0 / (a * b * b)};
            break;
        }
        case Family::X3: {
            e.diag = {1, 1, 1, 1, 1, 1, 1, 1};
            e.anti = {a * b * b, -b, a, -1.0 / b, b, -1.0 / a, 1.0 / b, -1.0 / (a * b * b)};
            break;
        }
        case Family::X4: {
            const cplx f = dl * dl - 2.0 * dl + 2.0;
            detail::require_nonzero(f, "delta^2 - 2*delta + 2");
            e.diag = {2.0 - dl, 1, 2.0 - dl, 1, 1, dl, 1, dl};
            e.anti = {a * b * b / f, b, a, f / b, b, 1.0 / a, f / b, f / (a * b * b)};
            break;
        }
        case Family::X5: {
            e.diag = {i, 1, 1, i, 1, i, i, 1};
            e.anti = {-i * a * b * b, b, a, -i / b, b, -i / a, -i / b, 1.0 / (a * b * b)};
            break;
        }
        case Family::X6: {
            e.diag = {1, 1, 1, 1, 1, 1, 1, 1};
            e.anti = {a * b * b, b, a, 1.0 / b, b, 1.0 / a, 1.0 / b, 1.0 / (a * b * b)};
            break;
        }
        case Family::X7: {
            detail::require_nonzero(g, "gamma");
            e.diag = {1, 1, g, g, 1, 1, g, g};
            e.anti = {a * b * b / g, b, a, g / b, b, g / a, g / b, g * g / (a * b * b)};
            break;
        }
        default:
            throw std::invalid_argument("build_x_family: family is not one of x1..x7");
    }
    return detail::assemble_xshape(e, p.lambda);
}

// dispatch for the CLI and fixtures
inline CMat build_family(const FamilyParams& p) {
    switch (p.family) {
        case Family::Rd: return p.lambda * build_rd(p.d);
        case Family::KL1: return p.lambda * build_kl(1);
        case Family::KL2: return p.lambda * build_kl(2);
        case Family::KL3: return p.lambda * build_kl(3);
        case Family::RX: return p.lambda * build_rx();
        default: return build_x_family(p);
    }
}

// the equation a family member is expected to solve
inline Equation governing_equation(Family f) {
    switch (f) {
        case Family::Rd: return Equation::AYBE_MATRIX;
        case Family::KL1:
        case Family::KL2:
        case Family::KL3: return Equation::BYBE;
        default: return Equation::GYBE;  // rx, x1..x7 live on the (2,3,2)-gYBE
    }
}

// ── Unitarity conditions for the x families ────────────────────────────────

struct UnitarityCondition {
    struct Clause {
        std::string description;
        bool satisfied;
        double defect;
    };
    Family family;
    std::vector<Clause> constraints;
    bool overall = false;         // λ·X unitary within tol (the numeric arbiter)
    double unitary_defect = 0.0;  // max-abs of (λX)(λX)† − I
};

namespace detail {

inline double unitary_defect_of(const CMat& m) {
    double worst = 0.0;
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < m.ncols; ++k) s += m(r, k) * std::conj(m(c, k));
            if (r == c) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

}  // namespace detail

// Evaluates the stated unitarity clauses for x1..x5 numerically and cross-checks
// against the actual unitarity of λ·X; `overall` reports the arbiter.
// x5 inherits the x2 clause set through x5 = 2·x2⁻¹ (α→iα, β→iβ).
inline UnitarityCondition unitarity_conditions(const FamilyParams& p, double tol = 1e-10) {
    UnitarityCondition out;
    out.family = p.family;
    const double amod = std::abs(p.alpha);
    const double bmod = std::abs(p.beta);
    const double lsq = std::norm(p.lambda);
    auto clause = [&](std::string desc, double defect) {
        out.constraints.push_back({std::move(desc), defect <= tol, defect});
    };
    switch (p.family) {
        case Family::X1: {
            clause("Re(delta) = 0", std::abs(p.delta.real()));
            clause("delta^2 = -|beta|^2", std::abs(p.delta * p.delta + bmod * bmod));
            clause("|alpha| = 1", std::abs(amod - 1.0));
            clause("|lambda|^2 = 1/(1+|delta|^2)", std::abs(lsq - 1.0 / (1.0 + std::norm(p.delta))));
            break;
        }
        case Family::X2:
        case Family::X3:
        case Family::X5: {
            clause("|alpha| = 1", std::abs(amod - 1.0));
            clause("|beta| = 1", std::abs(bmod - 1.0));
            clause("|lambda|^2 = 1/2", std::abs(lsq - 0.5));
            break;
        }
        case Family::X4: {
            const cplx one_i{1.0, 1.0};
            const double s7 = std::sqrt(7.0) / 4.0;
            const std::array<cplx, 5> candidates = {one_i, std::conj(one_i), cplx{1.0, 0.0},
                                                    cplx{1.25, s7}, cplx{1.25, -s7}};
            double best = std::numeric_limits<double>::infinity();
            for (const cplx& c : candidates) best = std::min(best, std::abs(p.delta - c));
            clause("delta in {1+i, 1-i, 1, 5/4+i*sqrt7/4, 5/4-i*sqrt7/4}", best);
            const cplx dbar = std::conj(p.delta);
            clause("|alpha|^2 = (delta-2)/conj(delta)", std::abs(amod * amod - (p.delta - 2.0) / dbar));
            clause("|beta|^2 = conj(delta)^2 - 2conj(delta) + 2",
                   std::abs(bmod * bmod - (dbar * dbar - 2.0 * dbar + 2.0)));
            clause("|lambda|^2 = 1/(1+|beta|^2)", std::abs(lsq - 1.0 / (1.0 + bmod * bmod)));
            break;
        }
        default:
            throw std::invalid_argument("unitarity_conditions: no stated conditions for family " +
                                        std::string(to_string(p.family)));
    }
    const CMat m = build_x_family(p);  // includes λ
    out.unitary_defect = detail::unitary_defect_of(m);
    out.overall = out.unitary_defect <= tol;
    return out;
}

}  // namespace ybx

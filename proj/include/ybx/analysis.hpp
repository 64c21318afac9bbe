// Entanglement-based universality checks and the executable forms of the
// scalar-identity theorems.
//
// A two-qudit unitary is universal (together with all local gates) iff it is
// entangling: some product state maps to a state of Schmidt rank ≥ 2.  The
// checker sweeps every computational product state plus a seeded batch of
// random product states — basis states alone are insufficient, diagonal
// gates never entangle them.  Universality itself is derived by citation
// from the entangling verdict, not re-proven here.

#pragma once

#include <string>
#include <vector>

#include "ybx/families.hpp"
#include "ybx/matrix.hpp"
#include "ybx/random.hpp"
#include "ybx/verify.hpp"

namespace ybx {

constexpr double kSchmidtSingularValueTol = 1e-10;

// ── Schmidt rank via one-sided Jacobi ───────────────────────────────────────

// singular values of a dense complex matrix, descending
inline std::vector<double> singular_values(const CMat& m) {
    // one-sided Jacobi on columns of a working copy (rows if wide)
    CMat w = (m.nrows >= m.ncols) ? m : transpose(m);
    const int rows = w.nrows, cols = w.ncols;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < cols - 1; ++p)
            for (int q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq = 0.0;
                for (int r = 0; r < rows; ++r) {
                    app += std::norm(w(r, p));
                    aqq += std::norm(w(r, q));
                    apq += std::conj(w(r, p)) * w(r, q);
                }
                const double mag = std::abs(apq);
                off = std::max(off, mag);
                if (mag < 1e-300) continue;
                // Jacobi rotation diagonalizing [[app, apq], [conj(apq), aqq]]
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const cplx phase = apq / mag;
                for (int r = 0; r < rows; ++r) {
                    const cplx vp = w(r, p), vq = w(r, q);
                    w(r, p) = c * vp - s * std::conj(phase) * vq;
                    w(r, q) = s * phase * vp + c * vq;
                }
            }
        if (off < 1e-15 * (1.0 + norm_max(w))) break;
    }
    std::vector<double> sv(cols);
    for (int c = 0; c < cols; ++c) {
        double nrm = 0.0;
        for (int r = 0; r < rows; ++r) nrm += std::norm(w(r, c));
        sv[c] = std::sqrt(nrm);
    }
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

// Schmidt rank of a bipartite state in C^{da} ⊗ C^{db}: the rank of its
// da×db reshaping; rank 1 ⇔ product state.
inline int schmidt_rank(const std::vector<cplx>& state, int da, int db,
                        double svtol = kSchmidtSingularValueTol) {
    if (static_cast<size_t>(da) * db != state.size())
        throw std::invalid_argument("schmidt_rank: state length is not da*db");
    CMat m(da, db, state);
    int rank = 0;
    for (double s : singular_values(m))
        if (s > svtol) ++rank;
    return rank;
}

// ── Entanglement reports ────────────────────────────────────────────────────

struct EntanglementReport {
    struct Witness {
        std::string input;  // product-state label
        int schmidt_rank;
    };
    int gate_dim = 0;
    std::vector<Witness> witnesses;
    bool entangling = false;  // some witness has rank ≥ 2
};

namespace detail {

inline std::vector<cplx> apply_to_state(const CMat& u, const std::vector<cplx>& v) {
    std::vector<cplx> out(u.nrows, cplx{0.0, 0.0});
    for (int r = 0; r < u.nrows; ++r)
        for (int c = 0; c < u.ncols; ++c) out[r] += u(r, c) * v[c];
    return out;
}

inline std::vector<cplx> product_state(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

}  // namespace detail

constexpr int kRandomWitnessCount = 20;

// Sweeps all d² computational product states |ij⟩ and a fixed seeded batch of
// random product states a⊗b.  The random batch is what catches diagonal
// entanglers, which act trivially on every basis state.
inline EntanglementReport is_entangling(const CMat& u, int d, uint64_t seed = 777,
                                        double svtol = kSchmidtSingularValueTol) {
    if (!u.square() || u.nrows != d * d)
        throw std::invalid_argument("is_entangling: gate must be d²×d²");
    EntanglementReport rep;
    rep.gate_dim = d * d;
    auto witness = [&](const std::string& label, const std::vector<cplx>& in) {
        const int rank = schmidt_rank(detail::apply_to_state(u, in), d, d, svtol);
        rep.witnesses.push_back({label, rank});
        if (rank >= 2) rep.entangling = true;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<cplx> in(static_cast<size_t>(d) * d, cplx{0.0, 0.0});
            in[static_cast<size_t>(i) * d + j] = 1.0;
            witness("|" + std::to_string(i) + std::to_string(j) + ">", in);
        }
    Rng rng(seed);
    for (int k = 0; k < kRandomWitnessCount; ++k)
        witness("rand" + std::to_string(k), detail::product_state(rng.state(d), rng.state(d)));
    return rep;
}

// Three-qubit bipartition scan for 8×8 gates: Schmidt ranks of U|ψ⟩ across
// the cuts 1|23, 2|13 (via conjugation by the swap of the first two factors)
// and 12|3, for |000⟩ and random three-fold product states.
struct BipartitionReport {
    struct Row {
        std::string input;
        int rank_1_23;
        int rank_2_13;
        int rank_12_3;
    };
    std::vector<Row> rows;
    bool entangling_every_cut = false;  // some input entangles each cut
};

inline BipartitionReport bipartition_report(const CMat& u, int d, uint64_t seed = 778,
                                            double svtol = kSchmidtSingularValueTol) {
    const int dim = d * d * d;
    if (!u.square() || u.nrows != dim)
        throw std::invalid_argument("bipartition_report: gate must be d³×d³");
    const CMat swap12 = kron(swap_operator(d), CMat::identity(d));
    const CMat u_swapped = (swap12 * u) * swap12;
    BipartitionReport rep;
    bool cut1 = false, cut2 = false, cut3 = false;
    auto scan = [&](const std::string& label, const std::vector<cplx>& in) {
        const auto out = detail::apply_to_state(u, in);
        const auto out_swapped = detail::apply_to_state(u_swapped, detail::apply_to_state(swap12, in));
        BipartitionReport::Row row;
        row.input = label;
        row.rank_1_23 = schmidt_rank(out, d, d * d, svtol);
        row.rank_2_13 = schmidt_rank(out_swapped, d, d * d, svtol);
        row.rank_12_3 = schmidt_rank(out, d * d, d, svtol);
        cut1 |= row.rank_1_23 >= 2;
        cut2 |= row.rank_2_13 >= 2;
        cut3 |= row.rank_12_3 >= 2;
        rep.rows.push_back(std::move(row));
    };
    std::vector<cplx> zero(dim, cplx{0.0, 0.0});
    zero[0] = 1.0;
    scan("|000>", zero);
    Rng rng(seed);
    for (int k = 0; k < kRandomWitnessCount; ++k)
        scan("rand" + std::to_string(k),
             detail::product_state(rng.state(d), detail::product_state(rng.state(d), rng.state(d))));
    rep.entangling_every_cut = cut1 && cut2 && cut3;
    return rep;
}

// ── CNOT decomposition ──────────────────────────────────────────────────────

// C²_{X,d} = (I ⊗ F_d†) · R_d · (I ⊗ F_d), checked entrywise
inline VerifyReport check_cnot_decomposition(int d, double tol = 1e-12) {
    if (d < 2) throw std::invalid_argument("check_cnot_decomposition: d must be at least 2");
    const CMat rd = build_rd(d);
    const CMat f = fourier(d);
    const CMat id = CMat::identity(d);
    const CMat recovered = (kron(id, adjoint(f)) * rd) * kron(id, f);
    const CMat target = controlled_increment(2, d);
    double rmax = 0.0, fro_sq = 0.0;
    for (size_t i = 0; i < target.a.size(); ++i) {
        const double mag = std::abs(recovered.a[i] - target.a[i]);
        rmax = std::max(rmax, mag);
        fro_sq += mag * mag;
    }
    return VerifyReport::make(Equation::CNOT_DECOMP, d * d, rmax, std::sqrt(fro_sq), tol);
}

// ── Scalar-law detectors ────────────────────────────────────────────────────

// When l ≥ m, every invertible gYBE solution is a scalar multiple of the
// identity; a non-scalar invertible matrix passing the equation is a
// violation of the law.
struct ScalarLawVerdict {
    bool gybe_passed;
    std::optional<cplx> scalar;
    bool violation;  // passed the equation while not scalar
};

inline ScalarLawVerdict scalar_law_detector(const CMat& r, const GybeSignature& sig,
                                            double tol = 1e-10) {
    if (sig.l < sig.m)
        throw std::invalid_argument("scalar_law_detector: requires l >= m");
    if (r.nrows != sig.r_dim())
        throw std::invalid_argument("scalar_law_detector: matrix dimension does not match signature");
    if (!is_invertible(r, 1e-300))
        throw std::invalid_argument("scalar_law_detector: matrix must be invertible");
    ScalarLawVerdict v{};
    v.gybe_passed = verify_gybe(r, sig, tol).passed;
    v.scalar = is_scalar_identity(r, tol * std::max(1.0, norm_max(r)));
    v.violation = v.gybe_passed && !v.scalar.has_value();
    return v;
}

// Invertible diagonal matrices pass the bYBE iff they are scalar identities
// (all of them pass the aYBE regardless); a pass/scalar mismatch is a
// violation.
struct DiagonalBybeVerdict {
    bool bybe_passed;
    std::optional<cplx> scalar;
    bool violation;  // pass/scalar disagree
};

inline DiagonalBybeVerdict diagonal_bybe_detector(const CMat& r, double tol = 1e-10) {
    if (!r.square()) throw std::invalid_argument("diagonal_bybe_detector: matrix must be square");
    for (int i = 0; i < r.nrows; ++i) {
        for (int j = 0; j < r.ncols; ++j) {
            if (i != j && r(i, j) != cplx{0.0, 0.0})
                throw std::invalid_argument("diagonal_bybe_detector: matrix must be diagonal");
            if (i == j && r(i, i) == cplx{0.0, 0.0})
                throw std::invalid_argument("diagonal_bybe_detector: diagonal must be invertible");
        }
    }
    DiagonalBybeVerdict v{};
    v.bybe_passed = verify_bybe(r, tol).passed;
    v.scalar = is_scalar_identity(r, tol * std::max(1.0, norm_max(r)));
    v.violation = v.bybe_passed != v.scalar.has_value();
    return v;
}

}  // namespace ybx

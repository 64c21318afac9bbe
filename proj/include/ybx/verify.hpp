// Residual verification of the Yang-Baxter equations:
//
//   bYBE   (R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)            on V⊗V⊗V
//   gYBE   (R⊗I^{⊗l})(I^{⊗l}⊗R)(R⊗I^{⊗l}) = …            R on V^{⊗m}
//   aYBE   R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂  with R₁₃=(I⊗P)(R⊗I)(I⊗P)
//   aYBE, index form: for all (j₁,j₂,j₃,l₁,l₂,l₃), summing over k₁,k₂,k₃,
//          R_{j₁j₂}^{k₁k₂} R_{k₁j₃}^{l₁k₃} R_{k₂k₃}^{l₂l₃}
//        = R_{j₂j₃}^{k₂k₃} R_{j₁k₃}^{k₁l₃} R_{k₁k₂}^{l₁l₂}
//
// plus braid-group relation sweeps for the induced representations
//   σ_i → I_{d^l}^{⊗i−1} ⊗ R ⊗ I_{d^l}^{⊗n−i−1}.
//
// Residuals are reported in max-abs and Frobenius norms, normalized by
// max(1, ‖R‖_max^deg) with deg the degree of the relation (3 for the cubic
// equations, 2 for far commutativity), so that pass/fail is scale-stable.
// For unnormalized matrices (‖R‖_max ≤ 1) the reported residual is the raw
// one, and residual(λR) = |λ|³·residual(R).

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ybx/matrix.hpp"

namespace ybx {

enum class Equation { BYBE, AYBE_MATRIX, AYBE_INDEX, GYBE, BRAID_REL, FAR_COMM, CNOT_DECOMP };

inline const char* to_string(Equation e) {
    switch (e) {
        case Equation::BYBE: return "bybe";
        case Equation::AYBE_MATRIX: return "aybe_matrix";
        case Equation::AYBE_INDEX: return "aybe_index";
        case Equation::GYBE: return "gybe";
        case Equation::BRAID_REL: return "braid_rel";
        case Equation::FAR_COMM: return "far_comm";
        case Equation::CNOT_DECOMP: return "cnot_decomp";
    }
    return "?";
}

// ── GybeSignature: the (d, m, l) of a generalized Yang-Baxter equation ──────

struct GybeSignature {
    int d;  // local dimension, ≥ 2
    int m;  // R acts on V^{⊗m}
    int l;  // identity padding

    GybeSignature(int d_, int m_, int l_) : d(d_), m(m_), l(l_) {
        if (d < 2) throw std::invalid_argument("GybeSignature: d must be at least 2");
        if (m < 1 || l < 1) throw std::invalid_argument("GybeSignature: m and l must be at least 1");
    }

    long long r_dim() const {  // d^m
        long long v = 1;
        for (int i = 0; i < m; ++i) v *= d;
        return v;
    }

    long long equation_dim() const {  // d^{m+l}
        long long v = r_dim();
        for (int i = 0; i < l; ++i) v *= d;
        return v;
    }

    // far commutativity of the induced representation holds automatically
    // when l > m/2 (the R-blocks of distant generators act on disjoint factors)
    bool far_commutativity_guaranteed() const { return 2 * l > m; }
};

// ── VerifyReport ────────────────────────────────────────────────────────────

struct VerifyReport {
    Equation equation;
    int lhs_dim = 0;          // dimension of the space both sides act on
    double residual_max = 0;  // normalized max-abs residual
    double residual_fro = 0;  // normalized Frobenius residual
    double tol = 0;
    bool passed = false;
    std::string detail;  // e.g. the relation attaining the worst residual

    static VerifyReport make(Equation eq, int dim, double rmax, double rfro, double tol,
                             std::string detail = {}) {
        return VerifyReport{eq, dim, rmax, rfro, tol, rmax <= tol, std::move(detail)};
    }
};

namespace detail {

inline double scale_normalizer(const CMat& r, int degree) {
    double n = norm_max(r);
    double p = 1.0;
    for (int i = 0; i < degree; ++i) p *= n;
    return std::max(1.0, p);
}

// nonzero entries of R grouped by row, for structured application
struct SparseRows {
    long long n = 0;
    std::vector<std::vector<std::pair<int, cplx>>> rows;

    explicit SparseRows(const CMat& r) : n(r.nrows), rows(r.nrows) {
        for (int i = 0; i < r.nrows; ++i)
            for (int j = 0; j < r.ncols; ++j)
                if (r(i, j) != cplx{0.0, 0.0}) rows[i].emplace_back(j, r(i, j));
    }
};

// out = (I_left ⊗ R ⊗ I_right)·v for v of length left·n·right, R n×n
inline void apply_middle(const SparseRows& r, long long left, long long right,
                         const std::vector<cplx>& v, std::vector<cplx>& out) {
    const long long n = r.n;
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (long long g = 0; g < left; ++g) {
        const long long base = g * n * right;
        for (long long i = 0; i < n; ++i) {
            cplx* orow = &out[base + i * right];
            for (const auto& [j, rij] : r.rows[i]) {
                const cplx* vrow = &v[base + j * right];
                for (long long t = 0; t < right; ++t) orow[t] += rij * vrow[t];
            }
        }
    }
}

struct Residual {
    double max = 0.0;
    double fro_sq = 0.0;
};

// residual of the gYBE computed column by column without materializing any
// d^{m+l}-dimensional product; memory stays O(d^{m+l})
inline Residual gybe_residual_structured(const CMat& r, const GybeSignature& sig) {
    const long long dim = sig.equation_dim();
    const long long pad = dim / sig.r_dim();  // d^l
    const SparseRows sparse(r);
    std::vector<cplx> col(dim), t1(dim), t2(dim), lhs(dim), rhs(dim);
    Residual res;
    for (long long c = 0; c < dim; ++c) {
        std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
        col[c] = 1.0;
        // lhs column: (R⊗I)(I⊗R)(R⊗I)·e_c
        apply_middle(sparse, 1, pad, col, t1);
        apply_middle(sparse, pad, 1, t1, t2);
        apply_middle(sparse, 1, pad, t2, lhs);
        // rhs column: (I⊗R)(R⊗I)(I⊗R)·e_c
        apply_middle(sparse, pad, 1, col, t1);
        apply_middle(sparse, 1, pad, t1, t2);
        apply_middle(sparse, pad, 1, t2, rhs);
        for (long long i = 0; i < dim; ++i) {
            const double mag = std::abs(lhs[i] - rhs[i]);
            res.max = std::max(res.max, mag);
            res.fro_sq += mag * mag;
        }
    }
    return res;
}

inline Residual gybe_residual_dense(const CMat& r, const GybeSignature& sig) {
    const int pad = static_cast<int>(sig.equation_dim() / sig.r_dim());
    const CMat a = kron(r, CMat::identity(pad));
    const CMat b = kron(CMat::identity(pad), r);
    const CMat lhs = (a * b) * a;
    const CMat rhs = (b * a) * b;
    Residual res;
    for (size_t i = 0; i < lhs.a.size(); ++i) {
        const double mag = std::abs(lhs.a[i] - rhs.a[i]);
        res.max = std::max(res.max, mag);
        res.fro_sq += mag * mag;
    }
    return res;
}

constexpr long long kStructuredThreshold = 1 << 12;

inline Residual gybe_residual(const CMat& r, const GybeSignature& sig) {
    if (sig.equation_dim() > kStructuredThreshold) return gybe_residual_structured(r, sig);
    return gybe_residual_dense(r, sig);
}

inline int square_side(const CMat& r, const char* who) {
    if (!r.square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r.nrows))));
    if (d * d != r.nrows)
        throw std::invalid_argument(std::string(who) + ": dimension is not a perfect square");
    return d;
}

}  // namespace detail

// ── gYBE / bYBE ─────────────────────────────────────────────────────────────

inline VerifyReport verify_gybe(const CMat& r, const GybeSignature& sig, double tol = 1e-10) {
    if (!r.square() || r.nrows != sig.r_dim())
        throw std::invalid_argument("verify_gybe: matrix dimension does not match signature");
    const auto res = detail::gybe_residual(r, sig);
    const double nrm = detail::scale_normalizer(r, 3);
    return VerifyReport::make(Equation::GYBE, static_cast<int>(sig.equation_dim()),
                              res.max / nrm, std::sqrt(res.fro_sq) / nrm, tol);
}

inline VerifyReport verify_bybe(const CMat& r, double tol = 1e-10) {
    const int d = detail::square_side(r, "verify_bybe");
    // the bYBE is the (d,2,1)-gYBE; share the exact code path
    detail::Residual res;
    if (d == 1) {
        res = {};  // 1×1: both sides are r³
    } else {
        res = detail::gybe_residual(r, GybeSignature(d, 2, 1));
    }
    const double nrm = detail::scale_normalizer(r, 3);
    return VerifyReport::make(Equation::BYBE, d * d * d, res.max / nrm, std::sqrt(res.fro_sq) / nrm,
                              tol);
}

// ── aYBE, matrix form ───────────────────────────────────────────────────────

inline VerifyReport verify_aybe_matrix(const CMat& r, double tol = 1e-10) {
    const int d = detail::square_side(r, "verify_aybe_matrix");
    const CMat id = CMat::identity(d);
    const CMat r12 = kron(r, id);
    const CMat r23 = kron(id, r);
    const CMat ip = kron(id, swap_operator(d));
    const CMat r13 = (ip * r12) * ip;
    const CMat lhs = (r12 * r13) * r23;
    const CMat rhs = (r23 * r13) * r12;
    detail::Residual res;
    for (size_t i = 0; i < lhs.a.size(); ++i) {
        const double mag = std::abs(lhs.a[i] - rhs.a[i]);
        res.max = std::max(res.max, mag);
        res.fro_sq += mag * mag;
    }
    const double nrm = detail::scale_normalizer(r, 3);
    return VerifyReport::make(Equation::AYBE_MATRIX, d * d * d, res.max / nrm,
                              std::sqrt(res.fro_sq) / nrm, tol);
}

// ── aYBE, index form ────────────────────────────────────────────────────────

// Evaluates all d⁶ component equations; R_{ij}^{ab} is the entry at row
// (a,b), column (i,j) under the PairIndex convention.  Summation over the
// k-indices runs innermost with a fixed loop order so residuals are
// bit-reproducible.  Note the side correspondence with the matrix form:
// the indexed lhs below is entrywise the product R₂₃R₁₃R₁₂ (R₁₂ acts first
// there, so its input indices are the js) and the indexed rhs is R₁₂R₁₃R₂₃;
// the equation is symmetric, so the residual is unaffected.
inline VerifyReport verify_aybe_index(const CMat& r, double tol = 1e-10) {
    const int d = detail::square_side(r, "verify_aybe_index");
    auto entry = [&](int up1, int up2, int lo1, int lo2) -> const cplx& {
        return r(pair_flat(d, up1, up2), pair_flat(d, lo1, lo2));
    };
    detail::Residual res;
    for (int j1 = 0; j1 < d; ++j1)
        for (int j2 = 0; j2 < d; ++j2)
            for (int j3 = 0; j3 < d; ++j3)
                for (int l1 = 0; l1 < d; ++l1)
                    for (int l2 = 0; l2 < d; ++l2)
                        for (int l3 = 0; l3 < d; ++l3) {
                            cplx lhs = 0.0, rhs = 0.0;
                            for (int k1 = 0; k1 < d; ++k1)
                                for (int k2 = 0; k2 < d; ++k2)
                                    for (int k3 = 0; k3 < d; ++k3) {
                                        lhs += entry(k1, k2, j1, j2) * entry(l1, k3, k1, j3) *
                                               entry(l2, l3, k2, k3);
                                        rhs += entry(k2, k3, j2, j3) * entry(k1, l3, j1, k3) *
                                               entry(l1, l2, k1, k2);
                                    }
                            const double mag = std::abs(lhs - rhs);
                            res.max = std::max(res.max, mag);
                            res.fro_sq += mag * mag;
                        }
    const double nrm = detail::scale_normalizer(r, 3);
    return VerifyReport::make(Equation::AYBE_INDEX, d * d * d, res.max / nrm,
                              std::sqrt(res.fro_sq) / nrm, tol);
}

// ── Braid representations ───────────────────────────────────────────────────

namespace detail {

inline long long ipow(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// the space all generator images act on: (n−2) identity factors of size d^l
// around one R factor of size d^m
inline long long representation_dim(const GybeSignature& sig, int n_strands) {
    return ipow(sig.d, sig.m) * ipow(ipow(sig.d, sig.l), n_strands - 2);
}

}  // namespace detail

// image of σ_i under σ_i → I_{d^l}^{⊗i−1} ⊗ R ⊗ I_{d^l}^{⊗n−i−1}, built densely
inline CMat braid_representation(const CMat& r, const GybeSignature& sig, int n_strands, int i) {
    if (r.nrows != sig.r_dim())
        throw std::invalid_argument("braid_representation: matrix dimension does not match signature");
    if (n_strands < 2) throw std::invalid_argument("braid_representation: need at least 2 strands");
    if (i < 1 || i > n_strands - 1)
        throw std::invalid_argument("braid_representation: generator index out of range");
    const int pad = static_cast<int>(detail::ipow(sig.d, sig.l));
    const CMat left = kron_pow(CMat::identity(pad), i - 1);
    const CMat right = kron_pow(CMat::identity(pad), n_strands - i - 1);
    return kron(kron(left, r), right);
}

namespace detail {

// σ_i applied to a vector, structured
inline void apply_generator(const SparseRows& r, const GybeSignature& sig, int n_strands, int i,
                            const std::vector<cplx>& v, std::vector<cplx>& out) {
    const long long pad = ipow(sig.d, sig.l);
    const long long left = ipow(pad, i - 1);
    const long long right = ipow(pad, n_strands - i - 1);
    apply_middle(r, left, right, v, out);
}

}  // namespace detail

constexpr long long kBraidDimensionCap = 1 << 16;

// Sweeps every adjacent Yang-Baxter relation σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}
// and every far-commutativity pair σ_iσ_j = σ_jσ_i (|i−j| > 1) of the induced
// representation.  The report carries the worst residual and names the
// relation attaining it.
inline VerifyReport verify_braid_relations(const CMat& r, const GybeSignature& sig, int n_strands,
                                           double tol = 1e-10, bool force = false) {
    if (n_strands < 3) throw std::invalid_argument("verify_braid_relations: need at least 3 strands");
    if (r.nrows != sig.r_dim())
        throw std::invalid_argument("verify_braid_relations: matrix dimension does not match signature");
    const long long dim = detail::representation_dim(sig, n_strands);
    if (dim > kBraidDimensionCap && !force)
        throw std::invalid_argument("verify_braid_relations: representation dimension " +
                                    std::to_string(dim) + " exceeds cap; pass force to override");

    const double nrm3 = detail::scale_normalizer(r, 3);
    const double nrm2 = detail::scale_normalizer(r, 2);
    const detail::SparseRows sparse(r);

    double worst = 0.0, fro_sq = 0.0;
    std::string worst_name = "none";
    std::vector<cplx> col(dim), t1(dim), t2(dim), lhs(dim), rhs(dim);

    auto sweep = [&](int gi, int gj, bool yang_baxter) {
        const double nrm = yang_baxter ? nrm3 : nrm2;
        double rel_max = 0.0;
        for (long long c = 0; c < dim; ++c) {
            std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
            col[c] = 1.0;
            if (yang_baxter) {
                detail::apply_generator(sparse, sig, n_strands, gi, col, t1);
                detail::apply_generator(sparse, sig, n_strands, gj, t1, t2);
                detail::apply_generator(sparse, sig, n_strands, gi, t2, lhs);
                detail::apply_generator(sparse, sig, n_strands, gj, col, t1);
                detail::apply_generator(sparse, sig, n_strands, gi, t1, t2);
                detail::apply_generator(sparse, sig, n_strands, gj, t2, rhs);
            } else {
                detail::apply_generator(sparse, sig, n_strands, gj, col, t1);
                detail::apply_generator(sparse, sig, n_strands, gi, t1, lhs);
                detail::apply_generator(sparse, sig, n_strands, gi, col, t1);
                detail::apply_generator(sparse, sig, n_strands, gj, t1, rhs);
            }
            for (long long k = 0; k < dim; ++k) {
                const double mag = std::abs(lhs[k] - rhs[k]) / nrm;
                rel_max = std::max(rel_max, mag);
                fro_sq += mag * mag;
            }
        }
        if (rel_max > worst) {
            worst = rel_max;
            worst_name = (yang_baxter ? "yang_baxter(" : "far_comm(") + std::to_string(gi) + "," +
                         std::to_string(gj) + ")";
        }
    };

    for (int i = 1; i + 1 <= n_strands - 1; ++i) sweep(i, i + 1, true);
    for (int i = 1; i <= n_strands - 1; ++i)
        for (int j = i + 2; j <= n_strands - 1; ++j) sweep(i, j, false);

    return VerifyReport::make(Equation::BRAID_REL, static_cast<int>(dim), worst, std::sqrt(fro_sq),
                              tol, worst_name);
}

// far-commutativity pairs only; isolates the l > m/2 guarantee
inline VerifyReport verify_far_commutativity(const CMat& r, const GybeSignature& sig, int n_strands,
                                             double tol = 1e-10, bool force = false) {
    if (n_strands < 4)
        throw std::invalid_argument("verify_far_commutativity: need at least 4 strands for a far pair");
    if (r.nrows != sig.r_dim())
        throw std::invalid_argument("verify_far_commutativity: matrix dimension does not match signature");
    const long long dim = detail::representation_dim(sig, n_strands);
    if (dim > kBraidDimensionCap && !force)
        throw std::invalid_argument("verify_far_commutativity: representation dimension " +
                                    std::to_string(dim) + " exceeds cap; pass force to override");
    const double nrm = detail::scale_normalizer(r, 2);
    const detail::SparseRows sparse(r);
    double worst = 0.0, fro_sq = 0.0;
    std::string worst_name = "none";
    std::vector<cplx> col(dim), t1(dim), lhs(dim), rhs(dim);
    for (int i = 1; i <= n_strands - 1; ++i)
        for (int j = i + 2; j <= n_strands - 1; ++j) {
            double rel_max = 0.0;
            for (long long c = 0; c < dim; ++c) {
                std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
                col[c] = 1.0;
                detail::apply_generator(sparse, sig, n_strands, j, col, t1);
                detail::apply_generator(sparse, sig, n_strands, i, t1, lhs);
                detail::apply_generator(sparse, sig, n_strands, i, col, t1);
                detail::apply_generator(sparse, sig, n_strands, j, t1, rhs);
                for (long long k = 0; k < dim; ++k) {
                    const double mag = std::abs(lhs[k] - rhs[k]) / nrm;
                    rel_max = std::max(rel_max, mag);
                    fro_sq += mag * mag;
                }
            }
            if (rel_max > worst) {
                worst = rel_max;
                worst_name = "far_comm(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    return VerifyReport::make(Equation::FAR_COMM, static_cast<int>(dim), worst, std::sqrt(fro_sq),
                              tol, worst_name);
}

}  // namespace ybx

// Dense complex matrices with the tensor-index conventions used throughout
// this library, plus the primitive gate constructors (swap, Fourier,
// increment, controlled increment) every other module consumes.
//
// Index convention: a matrix acting on V ⊗ V maps basis columns indexed by
// the *lower* pair (i,j) to rows indexed by the *upper* pair (a,b), both
// packed zero-based as d·(i−1) + (j−1) for 1-based qudit labels.  Kronecker
// products follow the aB convention: block (i,j) of A⊗B equals a_ij·B.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

using cplx = std::complex<double>;

// ── CMat: dense row-major complex matrix ────────────────────────────────────

struct CMat {
    int nrows = 0;
    int ncols = 0;
    std::vector<cplx> a;  // row-major, length nrows*ncols

    CMat() = default;
    CMat(int r, int c) : nrows(r), ncols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("CMat: negative dimension");
    }
    CMat(int r, int c, std::vector<cplx> entries) : nrows(r), ncols(c), a(std::move(entries)) {
        if (r < 0 || c < 0) throw std::invalid_argument("CMat: negative dimension");
        if (a.size() != static_cast<size_t>(r) * c)
            throw std::invalid_argument("CMat: entry count does not match dimensions");
    }

    cplx& operator()(int r, int c) { return a[static_cast<size_t>(r) * ncols + c]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<size_t>(r) * ncols + c]; }

    bool square() const { return nrows == ncols; }
    size_t size() const { return a.size(); }

    static CMat zero(int r, int c) { return CMat(r, c); }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMat diagonal(const std::vector<cplx>& diag) {
        CMat m(static_cast<int>(diag.size()), static_cast<int>(diag.size()));
        for (size_t i = 0; i < diag.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
        return m;
    }

    bool all_finite() const {
        for (const cplx& z : a)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }
};

inline bool operator==(const CMat& x, const CMat& y) {
    return x.nrows == y.nrows && x.ncols == y.ncols && x.a == y.a;
}

// ── PairIndex: the (i,j) ↔ flat pairing of two qudit labels ────────────────

// Labels are 1-based (matching the usual index notation for R_{ij}^{ab});
// the flat index is zero-based and row-major in the pair.
struct PairIndex {
    int d;
    int first;   // in [1, d]
    int second;  // in [1, d]

    PairIndex(int dim, int i, int j) : d(dim), first(i), second(j) {
        if (dim < 1 || i < 1 || i > dim || j < 1 || j > dim)
            throw std::invalid_argument("PairIndex: label out of range");
    }

    int flat() const { return d * (first - 1) + (second - 1); }

    static PairIndex from_flat(int d, int k) {
        if (d < 1 || k < 0 || k >= d * d) throw std::invalid_argument("PairIndex: flat index out of range");
        return PairIndex(d, k / d + 1, k % d + 1);
    }
};

// zero-based convenience used in hot loops: (i,j) ↦ i·d + j, i,j ∈ [0,d)
inline int pair_flat(int d, int i, int j) { return i * d + j; }

// ── Elementwise arithmetic ──────────────────────────────────────────────────

namespace detail {
inline void require_same_shape(const CMat& x, const CMat& y, const char* op) {
    if (x.nrows != y.nrows || x.ncols != y.ncols)
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}
}  // namespace detail

inline CMat operator+(const CMat& x, const CMat& y) {
    detail::require_same_shape(x, y, "operator+");
    CMat out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

inline CMat operator-(const CMat& x, const CMat& y) {
    detail::require_same_shape(x, y, "operator-");
    CMat out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

inline CMat operator*(const cplx& s, const CMat& m) {
    CMat out = m;
    for (cplx& z : out.a) z *= s;
    return out;
}

inline CMat operator*(const CMat& m, const cplx& s) { return s * m; }

inline CMat operator*(const CMat& x, const CMat& y) {
    if (x.ncols != y.nrows) throw std::invalid_argument("operator*: inner dimension mismatch");
    CMat out(x.nrows, y.ncols);
    for (int r = 0; r < x.nrows; ++r) {
        for (int k = 0; k < x.ncols; ++k) {
            const cplx xv = x(r, k);
            if (xv == cplx{0.0, 0.0}) continue;
            const cplx* yrow = &y.a[static_cast<size_t>(k) * y.ncols];
            cplx* orow = &out.a[static_cast<size_t>(r) * out.ncols];
            for (int c = 0; c < y.ncols; ++c) orow[c] += xv * yrow[c];
        }
    }
    return out;
}

inline CMat transpose(const CMat& m) {
    CMat out(m.ncols, m.nrows);
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) out(c, r) = m(r, c);
    return out;
}

inline CMat conjugate(const CMat& m) {
    CMat out = m;
    for (cplx& z : out.a) z = std::conj(z);
    return out;
}

inline CMat adjoint(const CMat& m) {
    CMat out(m.ncols, m.nrows);
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

// ── Norms ───────────────────────────────────────────────────────────────────

inline double norm_max(const CMat& m) {
    double v = 0.0;
    for (const cplx& z : m.a) v = std::max(v, std::abs(z));
    return v;
}

inline double norm_fro(const CMat& m) {
    double s = 0.0;
    for (const cplx& z : m.a) s += std::norm(z);
    return std::sqrt(s);
}

inline double max_abs_diff(const CMat& x, const CMat& y) {
    detail::require_same_shape(x, y, "max_abs_diff");
    double v = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) v = std::max(v, std::abs(x.a[i] - y.a[i]));
    return v;
}

// ── Kronecker products ──────────────────────────────────────────────────────

inline CMat kron(const CMat& x, const CMat& y) {
    CMat out(x.nrows * y.nrows, x.ncols * y.ncols);
    for (int xr = 0; xr < x.nrows; ++xr)
        for (int xc = 0; xc < x.ncols; ++xc) {
            const cplx v = x(xr, xc);
            if (v == cplx{0.0, 0.0}) continue;
            for (int yr = 0; yr < y.nrows; ++yr)
                for (int yc = 0; yc < y.ncols; ++yc)
                    out(xr * y.nrows + yr, xc * y.ncols + yc) = v * y(yr, yc);
        }
    return out;
}

// k = 0 gives the 1×1 identity; k ≥ 1 the left-associated k-fold product.
inline CMat kron_pow(const CMat& m, int k) {
    if (k < 0) throw std::invalid_argument("kron_pow: negative exponent");
    CMat out = CMat::identity(1);
    for (int i = 0; i < k; ++i) out = kron(out, m);
    return out;
}

// ── Roots of unity and gate constructors ───────────────────────────────────

// e^{2πik/n}, with quarter-turn multiples returned exactly so that low-d
// constructions (F_2, R_2, X_d powers) come out with exact 0/±1/±i entries.
inline cplx root_of_unity(int n, long long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    long long r = k % n;
    if (r < 0) r += n;
    if ((4 * r) % n == 0) {
        switch ((4 * r) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return {std::cos(angle), std::sin(angle)};
}

// P: |ij⟩ → |ji⟩ on C^d ⊗ C^d.  P² = I exactly.
inline CMat swap_operator(int d) {
    if (d < 1) throw std::invalid_argument("swap_operator: d must be positive");
    CMat p(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(pair_flat(d, j, i), pair_flat(d, i, j)) = 1.0;
    return p;
}

// Discrete Fourier transform F_d, entry (j,k) = ω^{jk}/√d with ω = e^{2πi/d}.
inline CMat fourier(int d) {
    if (d < 1) throw std::invalid_argument("fourier: d must be positive");
    CMat f(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            f(j, k) = scale * root_of_unity(d, static_cast<long long>(j) * k);
    return f;
}

// Increment gate X_d: cyclic shift e_j → e_{j+1 mod d}; single 1 in the
// top-right corner.
inline CMat increment(int d) {
    if (d < 1) throw std::invalid_argument("increment: d must be positive");
    CMat x(d, d);
    for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return x;
}

// Controlled increment C^n_{X,d}: C¹ = X_d, and C^n is block diagonal with
// blocks (I, C^{n−1}, I, …, I), each of size d^{n−1}.  C²_{X,2} is CNOT.
inline CMat controlled_increment(int n, int d) {
    if (n < 1) throw std::invalid_argument("controlled_increment: n must be at least 1");
    if (d < 2) throw std::invalid_argument("controlled_increment: d must be at least 2");
    CMat c = increment(d);
    for (int level = 2; level <= n; ++level) {
        const int sub = c.nrows;  // d^{level-1}
        CMat next(sub * d, sub * d);
        for (int b = 0; b < d; ++b) {
            for (int r = 0; r < sub; ++r)
                for (int k = 0; k < sub; ++k)
                    next(b * sub + r, b * sub + k) = (b == 1) ? c(r, k) : (r == k ? cplx{1.0, 0.0} : cplx{0.0, 0.0});
        }
        c = std::move(next);
    }
    return c;
}

// ── Unitarity and scalar-identity probes ───────────────────────────────────

inline bool is_unitary(const CMat& m, double tol = 1e-12) {
    if (!m.square()) throw std::invalid_argument("is_unitary: matrix must be square");
    if (tol < 0) throw std::invalid_argument("is_unitary: negative tolerance");
    // max-abs of m·m† − I, accumulated without materializing the product
    double worst = 0.0;
    for (int r = 0; r < m.nrows; ++r) {
        for (int c = 0; c < m.ncols; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < m.ncols; ++k) s += m(r, k) * std::conj(m(c, k));
            if (r == c) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst <= tol;
}

// Returns λ when m equals λI entrywise within tol (λ = mean of the diagonal).
inline std::optional<cplx> is_scalar_identity(const CMat& m, double tol = 1e-10) {
    if (!m.square()) throw std::invalid_argument("is_scalar_identity: matrix must be square");
    if (tol < 0) throw std::invalid_argument("is_scalar_identity: negative tolerance");
    if (m.nrows == 0) return std::nullopt;
    cplx lambda = 0.0;
    for (int i = 0; i < m.nrows; ++i) lambda += m(i, i);
    lambda /= static_cast<double>(m.nrows);
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) {
            const cplx want = (r == c) ? lambda : cplx{0.0, 0.0};
            if (std::abs(m(r, c) - want) > tol) return std::nullopt;
        }
    return lambda;
}

// ── LU factorization with partial pivoting (inverse, det, condition) ───────

namespace detail {

struct Lu {
    CMat lu;                  // packed L\U factors
    std::vector<int> pivot;   // row permutation
    int sign = 1;
    bool singular = false;
};

inline Lu lu_factor(const CMat& m) {
    if (!m.square()) throw std::invalid_argument("lu_factor: matrix must be square");
    const int n = m.nrows;
    Lu f{m, std::vector<int>(n), 1, false};
    for (int i = 0; i < n; ++i) f.pivot[i] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        double bestmag = std::abs(f.lu(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(f.lu(r, col));
            if (mag > bestmag) {
                bestmag = mag;
                best = r;
            }
        }
        if (bestmag == 0.0) {
            f.singular = true;
            return f;
        }
        if (best != col) {
            for (int c = 0; c < n; ++c) std::swap(f.lu(col, c), f.lu(best, c));
            std::swap(f.pivot[col], f.pivot[best]);
            f.sign = -f.sign;
        }
        const cplx diag = f.lu(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cplx factor = f.lu(r, col) / diag;
            f.lu(r, col) = factor;
            for (int c = col + 1; c < n; ++c) f.lu(r, c) -= factor * f.lu(col, c);
        }
    }
    return f;
}

}  // namespace detail

inline cplx determinant(const CMat& m) {
    auto f = detail::lu_factor(m);
    if (f.singular) return 0.0;
    cplx det = static_cast<double>(f.sign);
    for (int i = 0; i < m.nrows; ++i) det *= f.lu(i, i);
    return det;
}

inline CMat inverse(const CMat& m) {
    auto f = detail::lu_factor(m);
    if (f.singular) throw std::invalid_argument("inverse: matrix is singular");
    const int n = m.nrows;
    CMat out(n, n);
    // solve LU x = P e_k column by column
    std::vector<cplx> x(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) x[i] = (f.pivot[i] == k) ? 1.0 : 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
            x[i] /= f.lu(i, i);
        }
        for (int i = 0; i < n; ++i) out(i, k) = x[i];
    }
    return out;
}

inline bool is_invertible(const CMat& m, double tol = 0.0) {
    auto f = detail::lu_factor(m);
    if (f.singular) return false;
    if (tol > 0.0) {
        for (int i = 0; i < m.nrows; ++i)
            if (std::abs(f.lu(i, i)) <= tol) return false;
    }
    return true;
}

// crude max-norm condition estimate ‖A‖·‖A⁻¹‖; infinity when singular
inline double condition_estimate(const CMat& m) {
    auto f = detail::lu_factor(m);
    if (f.singular) return std::numeric_limits<double>::infinity();
    return norm_max(m) * norm_max(inverse(m)) * m.nrows;
}

}  // namespace ybx

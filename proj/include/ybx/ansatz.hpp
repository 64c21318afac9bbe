// Exact symbolic enumeration of the polynomial system a sparsity ansatz
// induces on a gYBE, plus brute-force permutation search.
//
// Matrix entries at pattern cells become variables; expanding
// LHS − RHS of the gYBE entrywise yields one cubic polynomial per matrix
// position.  Coefficients are exact Gaussian rationals (they are in fact
// small integers for 0/1 structure constants).
//
// Deduplication convention (frozen after calibrating against the reference
// tallies 116 → 108 for the X-shape ansatz): equations are compared by exact
// polynomial equality of their expanded forms.  ±p pairs remain distinct
// equations; collapsing sign or scale undercounts the reference tally.
// Membership queries (contains_equation) are nevertheless answered up to an
// overall nonzero scalar.

#pragma once

#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <variant>

#include "ybx/matrix.hpp"
#include "ybx/random.hpp"
#include "ybx/verify.hpp"

namespace ybx {

// ── Exact scalars: (a + bi)/c with c > 0 and gcd(a,b,c) = 1 ─────────────────

struct GaussianRational {
    long long num_re = 0;
    long long num_im = 0;
    long long den = 1;

    GaussianRational() = default;
    GaussianRational(long long re, long long im = 0, long long d = 1) : num_re(re), num_im(im), den(d) {
        if (den == 0) throw std::invalid_argument("GaussianRational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            den = -den;
            num_re = -num_re;
            num_im = -num_im;
        }
        long long g = std::gcd(std::gcd(std::abs(num_re), std::abs(num_im)), den);
        if (g > 1) {
            num_re /= g;
            num_im /= g;
            den /= g;
        }
        if (num_re == 0 && num_im == 0) den = 1;
    }

    bool is_zero() const { return num_re == 0 && num_im == 0; }

    cplx to_complex() const {
        return {static_cast<double>(num_re) / den, static_cast<double>(num_im) / den};
    }

    double magnitude() const { return std::abs(to_complex()); }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.num_re * y.den + y.num_re * x.den, x.num_im * y.den + y.num_im * x.den,
                x.den * y.den};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.num_re * y.den - y.num_re * x.den, x.num_im * y.den - y.num_im * x.den,
                x.den * y.den};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.num_re * y.num_re - x.num_im * y.num_im,
                x.num_re * y.num_im + x.num_im * y.num_re, x.den * y.den};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        if (y.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
        // multiply by the conjugate over |y|²; keep everything integral
        const long long nr = x.num_re * y.num_re + x.num_im * y.num_im;
        const long long ni = x.num_im * y.num_re - x.num_re * y.num_im;
        const long long ysq = y.num_re * y.num_re + y.num_im * y.num_im;
        return {nr * y.den, ni * y.den, x.den * ysq};
    }
    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.num_re == y.num_re && x.num_im == y.num_im && x.den == y.den;
    }
    friend auto operator<=>(const GaussianRational& x, const GaussianRational& y) = default;
};

// ── Monomials and sparse polynomials ────────────────────────────────────────

// sorted variable ids; [] is the constant monomial.  Ordering is the
// container's lexicographic order (shorter prefixes first), which makes the
// constant monomial least and gives every polynomial a well-defined least
// monomial.
using Monomial = std::vector<int>;

struct SparsePoly {
    std::map<Monomial, GaussianRational> terms;  // zero coefficients never stored

    bool is_zero() const { return terms.empty(); }

    void add_term(Monomial mono, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        std::sort(mono.begin(), mono.end());
        auto [it, inserted] = terms.emplace(std::move(mono), coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    int total_degree() const {
        size_t deg = 0;
        for (const auto& [mono, c] : terms) deg = std::max(deg, mono.size());
        return static_cast<int>(deg);
    }

    friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) {
        SparsePoly out = x;
        for (const auto& [mono, c] : y.terms) out.add_term(mono, c);
        return out;
    }

    friend SparsePoly operator-(const SparsePoly& x, const SparsePoly& y) {
        SparsePoly out = x;
        for (const auto& [mono, c] : y.terms) out.add_term(mono, GaussianRational(0) - c);
        return out;
    }

    friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
        SparsePoly out;
        for (const auto& [mx, cx] : x.terms)
            for (const auto& [my, cy] : y.terms) {
                Monomial m = mx;
                m.insert(m.end(), my.begin(), my.end());
                out.add_term(std::move(m), cx * cy);
            }
        return out;
    }

    // divide by the least monomial's coefficient; the scale removed is
    // returned so numeric evaluation can reproduce raw residuals
    GaussianRational canonicalize() {
        if (terms.empty()) return GaussianRational(1);
        const GaussianRational scale = terms.begin()->second;
        for (auto& [mono, c] : terms) c = c / scale;
        return scale;
    }

    cplx evaluate(const std::vector<cplx>& point) const {
        cplx acc = 0.0;
        for (const auto& [mono, c] : terms) {
            cplx t = c.to_complex();
            for (int v : mono) t *= point[v];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const SparsePoly& x, const SparsePoly& y) { return x.terms == y.terms; }
    friend bool operator<(const SparsePoly& x, const SparsePoly& y) { return x.terms < y.terms; }
};

// ── Sparsity patterns ───────────────────────────────────────────────────────

struct SparsityPattern {
    struct Cell {
        int row, col;  // 0-based
        std::string name;
    };
    int dim = 0;
    std::vector<Cell> cells;

    SparsityPattern(int d, std::vector<Cell> c) : dim(d), cells(std::move(c)) {
        for (const Cell& cell : cells)
            if (cell.row < 0 || cell.row >= dim || cell.col < 0 || cell.col >= dim)
                throw std::invalid_argument("SparsityPattern: cell out of bounds");
    }

    // the 8×8 X-shape: main diagonal plus anti-diagonal, named r11..r88
    // row-major as in the ansatz display
    static SparsityPattern xshape() {
        std::vector<Cell> cells;
        auto name = [](int r, int c) {
            return "r" + std::to_string(r + 1) + std::to_string(c + 1);
        };
        for (int r = 0; r < 8; ++r) {
            cells.push_back({r, r, name(r, r)});
            cells.push_back({r, 7 - r, name(r, 7 - r)});
        }
        return SparsityPattern(8, std::move(cells));
    }

    static SparsityPattern diagonal(int dim) {
        std::vector<Cell> cells;
        for (int r = 0; r < dim; ++r)
            cells.push_back({r, r, "r" + std::to_string(r + 1) + std::to_string(r + 1)});
        return SparsityPattern(dim, std::move(cells));
    }

    static SparsityPattern none(int dim) { return SparsityPattern(dim, {}); }
};

// ── Ansatz systems ──────────────────────────────────────────────────────────

struct AnsatzSystem {
    std::vector<std::string> variables;  // index = variable id in the polynomials
    std::vector<SparsePoly> equations;   // expanded forms, sorted, exact-deduplicated

    int variable_id(const std::string& name) const {
        for (size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("AnsatzSystem: unknown variable " + name);
    }
};

namespace detail {

// drop zero polynomials, sort, remove exact duplicates
inline void finalize_system(std::vector<SparsePoly>& polys, AnsatzSystem& out) {
    std::sort(polys.begin(), polys.end());
    for (SparsePoly& p : polys) {
        if (p.is_zero()) continue;
        if (!out.equations.empty() && out.equations.back() == p) continue;
        out.equations.push_back(std::move(p));
    }
}

// sparse symbolic matrix: per-row maps column → polynomial
using SymbolicMatrix = std::vector<std::map<int, SparsePoly>>;

inline SymbolicMatrix symbolic_kron_left(const SymbolicMatrix& s, int pad) {
    // s ⊗ I_pad
    SymbolicMatrix out(s.size() * pad);
    for (size_t r = 0; r < s.size(); ++r)
        for (const auto& [c, poly] : s[r])
            for (int t = 0; t < pad; ++t) out[r * pad + t].emplace(c * pad + t, poly);
    return out;
}

inline SymbolicMatrix symbolic_kron_right(const SymbolicMatrix& s, int pad) {
    // I_pad ⊗ s
    const int n = static_cast<int>(s.size());
    SymbolicMatrix out(static_cast<size_t>(n) * pad);
    for (int t = 0; t < pad; ++t)
        for (int r = 0; r < n; ++r)
            for (const auto& [c, poly] : s[r]) out[t * n + r].emplace(t * n + c, poly);
    return out;
}

inline SymbolicMatrix symbolic_mul(const SymbolicMatrix& x, const SymbolicMatrix& y) {
    SymbolicMatrix out(x.size());
    for (size_t r = 0; r < x.size(); ++r)
        for (const auto& [k, xp] : x[r])
            for (const auto& [c, yp] : y[k]) {
                SparsePoly prod = xp * yp;
                auto [it, inserted] = out[r].emplace(c, prod);
                if (!inserted) it->second = it->second + prod;
            }
    return out;
}

}  // namespace detail

// Expands LHS − RHS of the gYBE with symbolic entries at the pattern cells
// and zeros elsewhere; returns the normalized deduplicated nonzero equations.
inline AnsatzSystem enumerate_equations(const SparsityPattern& pattern, const GybeSignature& sig) {
    if (pattern.dim != sig.r_dim())
        throw std::invalid_argument("enumerate_equations: pattern dimension does not match signature");
    AnsatzSystem out;
    detail::SymbolicMatrix s(pattern.dim);
    for (const auto& cell : pattern.cells) {
        SparsePoly p;
        p.add_term({static_cast<int>(out.variables.size())}, GaussianRational(1));
        if (!s[cell.row].emplace(cell.col, std::move(p)).second)
            throw std::invalid_argument("enumerate_equations: duplicate cell in pattern");
        out.variables.push_back(cell.name);
    }
    const int pad = static_cast<int>(sig.equation_dim() / sig.r_dim());
    const auto a = detail::symbolic_kron_left(s, pad);
    const auto b = detail::symbolic_kron_right(s, pad);
    const auto lhs = detail::symbolic_mul(detail::symbolic_mul(a, b), a);
    const auto rhs = detail::symbolic_mul(detail::symbolic_mul(b, a), b);

    std::vector<SparsePoly> polys;
    for (size_t r = 0; r < lhs.size(); ++r) {
        std::set<int> cols;
        for (const auto& [c, p] : lhs[r]) cols.insert(c);
        for (const auto& [c, p] : rhs[r]) cols.insert(c);
        for (int c : cols) {
            SparsePoly diff;
            if (auto it = lhs[r].find(c); it != lhs[r].end()) diff = diff + it->second;
            if (auto it = rhs[r].find(c); it != rhs[r].end()) diff = diff - it->second;
            if (!diff.is_zero()) polys.push_back(std::move(diff));
        }
    }
    detail::finalize_system(polys, out);
    return out;
}

// membership up to an overall nonzero scalar
inline bool contains_equation(const AnsatzSystem& sys, const SparsePoly& poly) {
    if (poly.is_zero()) throw std::invalid_argument("contains_equation: zero polynomial");
    SparsePoly probe = poly;
    probe.canonicalize();
    for (const SparsePoly& eq : sys.equations) {
        SparsePoly candidate = eq;
        candidate.canonicalize();
        if (candidate == probe) return true;
    }
    return false;
}

// an assignment maps a variable to an exact value or to another variable
using VarAssignment = std::variant<GaussianRational, std::string>;

inline AnsatzSystem substitute(const AnsatzSystem& sys,
                               const std::map<std::string, VarAssignment>& assignments) {
    // resolve variable→variable chains, rejecting cycles
    const int nvars = static_cast<int>(sys.variables.size());
    std::vector<std::optional<GaussianRational>> value(nvars);
    std::vector<int> target(nvars);
    std::iota(target.begin(), target.end(), 0);
    auto id_of = [&](const std::string& name) { return sys.variable_id(name); };
    for (const auto& [name, assign] : assignments) {
        const int id = id_of(name);
        if (std::holds_alternative<GaussianRational>(assign))
            value[id] = std::get<GaussianRational>(assign);
        else
            target[id] = id_of(std::get<std::string>(assign));
    }
    for (int v = 0; v < nvars; ++v) {
        std::set<int> seen{v};
        int cur = v;
        while (target[cur] != cur && !value[cur].has_value()) {
            cur = target[cur];
            if (!seen.insert(cur).second)
                throw std::invalid_argument("substitute: cyclic assignment");
        }
        target[v] = cur;
        if (value[cur].has_value()) value[v] = value[cur];
    }

    AnsatzSystem out;
    out.variables = sys.variables;
    std::vector<SparsePoly> polys;
    for (const SparsePoly& eq : sys.equations) {
        SparsePoly subst;
        for (const auto& [mono, coeff] : eq.terms) {
            GaussianRational c = coeff;
            Monomial m;
            for (int v : mono) {
                if (value[v].has_value())
                    c = c * (*value[v]);
                else
                    m.push_back(target[v]);
            }
            subst.add_term(std::move(m), c);
        }
        if (!subst.is_zero()) polys.push_back(std::move(subst));
    }
    detail::finalize_system(polys, out);
    return out;
}

// Max-abs residual over all equations.  Because equations are the unscaled
// entrywise differences of the gYBE (duplicates and zero entries removed),
// this equals the raw max-abs matrix residual of the assembled point.
inline double evaluate_system(const AnsatzSystem& sys, const std::map<std::string, cplx>& point) {
    std::vector<cplx> values(sys.variables.size());
    for (size_t v = 0; v < sys.variables.size(); ++v) {
        auto it = point.find(sys.variables[v]);
        if (it == point.end())
            throw std::invalid_argument("evaluate_system: missing variable " + sys.variables[v]);
        values[v] = it->second;
    }
    double worst = 0.0;
    for (const SparsePoly& eq : sys.equations)
        worst = std::max(worst, std::abs(eq.evaluate(values)));
    return worst;
}

inline CMat assemble_matrix(const SparsityPattern& pattern, const std::map<std::string, cplx>& point) {
    CMat m(pattern.dim, pattern.dim);
    for (const auto& cell : pattern.cells) {
        auto it = point.find(cell.name);
        if (it == point.end())
            throw std::invalid_argument("assemble_matrix: missing variable " + cell.name);
        m(cell.row, cell.col) = it->second;
    }
    return m;
}

// ── Brute-force permutation search ──────────────────────────────────────────

namespace detail {

// check the gYBE for a permutation candidate entirely in permutation
// arithmetic; `probe_only` restricts to one basis point (a sound filter)
inline bool permutation_solves_gybe(const std::vector<int>& perm, long long pad, long long probe) {
    const long long n = static_cast<long long>(perm.size());
    const long long dim = n * pad;
    auto a = [&](long long x) {  // (R ⊗ I_pad)
        return perm[static_cast<size_t>(x / pad)] * pad + x % pad;
    };
    auto b = [&](long long x) {  // (I_pad ⊗ R)
        return (x / n) * n + perm[static_cast<size_t>(x % n)];
    };
    if (probe >= 0) return a(b(a(probe))) == b(a(b(probe)));
    for (long long x = 0; x < dim; ++x)
        if (a(b(a(x))) != b(a(b(x)))) return false;
    return true;
}

inline CMat permutation_matrix(const std::vector<int>& perm) {
    CMat m(static_cast<int>(perm.size()), static_cast<int>(perm.size()));
    for (size_t c = 0; c < perm.size(); ++c) m(perm[c], static_cast<int>(c)) = 1.0;
    return m;
}

}  // namespace detail

// All d^m × d^m permutation matrices solving the (d,m,l)-gYBE, in lexicographic
// order of the underlying permutation.  Candidates beyond 8! need `force`
// (and 16 points is the hard ceiling); the filter probes one random basis
// point before the full sweep.
inline std::vector<CMat> search_permutation_solutions(const GybeSignature& sig,
                                                      std::optional<size_t> limit = std::nullopt,
                                                      bool force = false, int jobs = 1,
                                                      uint64_t seed = 2024) {
    const long long n = sig.r_dim();
    if (n > 16)
        throw std::invalid_argument("search_permutation_solutions: d^m > 16 is not searchable");
    if (n > 8 && !force)
        throw std::invalid_argument(
            "search_permutation_solutions: d^m > 8 exceeds the desk-scale cap; pass force");
    const long long pad = sig.equation_dim() / n;
    Rng rng(seed);
    const long long probe_point = rng.integer(0, static_cast<int>(n * pad - 1));

    auto gate = [&](const std::vector<int>& perm) {
        CMat m = detail::permutation_matrix(perm);
        // formal gate: the residual of a 0/1 permutation candidate is exact
        if (!verify_gybe(m, sig, 1e-12).passed)
            throw std::logic_error("search_permutation_solutions: filter/verifier disagree");
        return m;
    };

    if (limit) {
        // lazy lexicographic walk with early exit; `jobs` only affects the
        // full enumeration, so limited results stay the lex-first ones
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<CMat> out;
        do {
            if (!detail::permutation_solves_gybe(perm, pad, probe_point)) continue;
            if (!detail::permutation_solves_gybe(perm, pad, -1)) continue;
            out.push_back(gate(perm));
            if (out.size() >= *limit) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

    const int workers = std::max(1, jobs);
    std::vector<std::vector<std::vector<int>>> found(static_cast<size_t>(n));

    // partition the search space by the first image value; each block is
    // enumerated independently and blocks are concatenated in order
    std::atomic<int> next_block{0};
    auto run = [&]() {
        for (;;) {
            const int first = next_block.fetch_add(1);
            if (first >= n) return;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (v != first) rest.push_back(v);
            std::vector<int> perm(static_cast<size_t>(n));
            perm[0] = first;
            do {
                std::copy(rest.begin(), rest.end(), perm.begin() + 1);
                if (!detail::permutation_solves_gybe(perm, pad, probe_point)) continue;
                if (detail::permutation_solves_gybe(perm, pad, -1)) found[first].push_back(perm);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    std::vector<CMat> out;
    for (const auto& block : found)
        for (const auto& perm : block) out.push_back(gate(perm));
    return out;
}

}  // namespace ybx

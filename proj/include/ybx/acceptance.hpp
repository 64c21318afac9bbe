// The acceptance suite: one entry per shipped claim, each checked at a pinned
// tolerance and timed against its budget.  `ybx selftest` and the acceptance
// test binary both drive this table.
//
// Two entries deserve a pointer to the fuller story in the README:
//   • #2 asserts, among other things, that all three 4×4 Kauffman–Lomonaco
//     matrices satisfy the *braided* YBE.  KL2 does; KL1 = diag(1,1,1,−1) and
//     KL3 instead satisfy the algebraic YBE exactly (their P-compositions
//     satisfy the braided one).  No convention rescues this: a non-scalar
//     diagonal matrix cannot satisfy the braided YBE (see the Theorem-3
//     detector, entry #9).  The sub-check is kept literal and reports red.
//   • #6 evaluates the stated X4 unitarity conditions.  They admit no
//     solution: |α|² would have to equal a quantity that is not a positive
//     real at any admissible δ, and the numeric arbiter confirms λX₄ is
//     never unitary.  The "condition-satisfying draws are unitary" half is
//     therefore vacuous for X4 and is reported as such.

#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ybx/analysis.hpp"
#include "ybx/ansatz.hpp"
#include "ybx/families.hpp"
#include "ybx/matrix.hpp"
#include "ybx/random.hpp"
#include "ybx/symmetry.hpp"
#include "ybx/verify.hpp"

namespace ybx {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
    // a red that is the pinned, documented state of the artifact (the KL
    // braided-YBE conjunct of #2); any deviation from the pinned failure
    // signature — including an unexpected pass — is a regression
    bool expected_failure = false;
};

struct AcceptanceOptions {
    bool quick = false;  // reduced draw counts, everything else identical
    uint64_t seed = 20240915;
    int jobs = 1;
};

namespace acceptance {

inline std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

// ── #1: R_d solves the aYBE, R_d·P the bYBE, d = 2..5 ──────────────────────

inline CriterionResult criterion_rd(const AcceptanceOptions&) {
    double worst_aybe = 0.0, worst_bybe = 0.0;
    bool ok = true;
    for (int d = 2; d <= 5; ++d) {
        const CMat rd = build_rd(d);
        const auto a = verify_aybe_matrix(rd, 1e-12);
        const auto b = verify_bybe(rd * swap_operator(d), 1e-12);
        worst_aybe = std::max(worst_aybe, a.residual_max);
        worst_bybe = std::max(worst_bybe, b.residual_max);
        ok = ok && a.passed && b.passed;
    }
    return {1, "rd solves aYBE and rd*P solves bYBE (d=2..5)", ok,
            "worst aYBE " + sci(worst_aybe) + ", worst bYBE " + sci(worst_bybe), 0};
}

// ── #2: R_2 = diag(1,1,1,−1) = KL1; KL unitarity; KL vs the braided YBE ────

inline CriterionResult criterion_kl(const AcceptanceOptions&) {
    const CMat rd2 = build_rd(2);
    const CMat kl1 = build_kl(1);
    // transcriptions pinned against independent literals, so a corrupted
    // constructor cannot hide behind an accidentally-still-valid solution
    const double s = 1.0 / std::sqrt(2.0);
    const bool exact = rd2 == kl1 && rd2 == CMat::diagonal({1.0, 1.0, 1.0, -1.0}) &&
                       build_kl(2) == CMat(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1}) &&
                       build_kl(3) == CMat(4, 4, {s, 0, 0, s, 0, s, s, 0, 0, s, -s, 0, -s, 0, 0, s});
    bool unitary = true;
    for (int k = 1; k <= 3; ++k) unitary = unitary && is_unitary(build_kl(k), 1e-12);
    std::ostringstream detail;
    detail << "rd(2)==diag(1,1,1,-1)==kl1 and kl2/kl3 transcriptions exact: "
           << (exact ? "yes" : "NO") << "; kl1..kl3 unitary: " << (unitary ? "yes" : "NO")
           << "; bYBE residuals:";
    double bybe_res[4] = {0, 0, 0, 0};
    bool bybe_all = true;
    for (int k = 1; k <= 3; ++k) {
        const auto b = verify_bybe(build_kl(k), 1e-12);
        bybe_res[k] = b.residual_max;
        bybe_all = bybe_all && b.passed;
        detail << " kl" << k << "=" << sci(b.residual_max);
    }
    bool pinned_signature = false;
    if (!bybe_all) {
        const double a1 = verify_aybe_matrix(build_kl(1), 1e-12).residual_max;
        const double a3 = verify_aybe_matrix(build_kl(3), 1e-12).residual_max;
        const double b1 = verify_bybe(build_kl(1) * swap_operator(2), 1e-12).residual_max;
        const double b3 = verify_bybe(build_kl(3) * swap_operator(2), 1e-12).residual_max;
        detail << " | kl1/kl3 are aYBE solutions (residuals " << sci(a1) << ", " << sci(a3)
               << ") and kl1*P, kl3*P solve the bYBE (" << sci(b1) << ", " << sci(b3)
               << "); a non-scalar diagonal cannot solve the braided YBE";
        // the pinned state: everything holds except the braided-YBE conjunct
        // for kl1/kl3, whose residuals are the exact analytic values 2 and 1/√2
        pinned_signature = exact && unitary && bybe_res[2] <= 1e-12 &&
                           std::abs(bybe_res[1] - 2.0) <= 1e-9 &&
                           std::abs(bybe_res[3] - 1.0 / std::sqrt(2.0)) <= 1e-9 &&
                           a1 <= 1e-12 && a3 <= 1e-12 && b1 <= 1e-12 && b3 <= 1e-12;
    }
    CriterionResult r{2, "rd(2) vs Kauffman-Lomonaco matrices", exact && unitary && bybe_all,
                      detail.str(), 0};
    r.expected_failure = !r.passed && pinned_signature;
    return r;
}

// ── #3: CNOT decomposition ──────────────────────────────────────────────────

inline CriterionResult criterion_cnot(const AcceptanceOptions&) {
    double worst = 0.0;
    bool ok = true;
    for (int d : {2, 3, 5}) {
        const auto rep = check_cnot_decomposition(d, 1e-12);
        worst = std::max(worst, rep.residual_max);
        ok = ok && rep.passed;
    }
    return {3, "C^2_{X,d} = (I x Fd^) rd (I x Fd), d in {2,3,5}", ok, "worst " + sci(worst), 0};
}

// ── #4: the printed 9×9 bYBE solution from Q = F₃³ ─────────────────────────

inline CMat golden_nine_by_nine() {
    const double s3 = std::sqrt(3.0);
    const cplx u{1, s3}, v{1, -s3};  // 1 ± i√3
    const std::vector<cplx> g = {
        4,  v,  u,  0,  0,  0,  2,  -v, -u,  //
        2,  -v, -u, 4,  v,  u,  0,  0,  0,   //
        0,  0,  0,  2,  -v, -u, 4,  v,  u,   //
        u,  4,  v,  0,  0,  0,  -u, 2,  -v,  //
        -u, 2,  -v, u,  4,  v,  0,  0,  0,   //
        0,  0,  0,  -u, 2,  -v, u,  4,  v,   //
        v,  u,  4,  0,  0,  0,  -v, -u, 2,   //
        -v, -u, 2,  v,  u,  4,  0,  0,  0,   //
        0,  0,  0,  -v, -u, 2,  v,  u,  4};
    return (1.0 / 6.0) * CMat(9, 9, g);
}

inline CriterionResult criterion_golden(const AcceptanceOptions&) {
    const CMat f3 = fourier(3);
    const CMat q = (f3 * f3) * f3;
    const CMat qq = kron(q, q);
    const CMat qqi = adjoint(qq);  // Q unitary
    const CMat r3 = build_rd(3);
    const CMat p = swap_operator(3);
    const CMat cand_rp = (qq * (r3 * p)) * qqi;   // (Q⊗Q) R₃P (Q⊗Q)⁻¹
    const CMat cand_pr = ((qq * r3) * qqi) * p;   // (Q⊗Q) R₃ (Q⊗Q)⁻¹ P
    const CMat golden = golden_nine_by_nine();
    const double d_rp = max_abs_diff(cand_rp, golden);
    const double d_pr = max_abs_diff(cand_pr, golden);
    const double cand_gap = max_abs_diff(cand_rp, cand_pr);
    const auto bybe = verify_bybe(cand_rp, 1e-12);
    const bool unit = is_unitary(cand_rp, 1e-12);
    // P commutes with (Q⊗Q)-conjugation, so the two composition candidates
    // coincide identically and both reproduce the printed matrix
    const bool ok = d_rp <= 1e-12 && d_pr <= 1e-12 && cand_gap <= 1e-14 && bybe.passed && unit;
    return {4, "printed 9x9 matrix = (QxQ) r3 P (QxQ)^-1, Q=F3^3", ok,
            "match " + sci(d_rp) + "; the two composition candidates are identical (gap " +
                sci(cand_gap) + "), bYBE " + sci(bybe.residual_max) + ", unitary " +
                (unit ? "yes" : "NO"),
            0};
}

// ── #5: R_X ─────────────────────────────────────────────────────────────────

inline CriterionResult criterion_rx(const AcceptanceOptions&) {
    const CMat rx = build_rx();
    const auto rep = verify_gybe(rx, GybeSignature(2, 3, 2), 1e-12);
    const bool unit = is_unitary(rx, 1e-12);
    return {5, "rx solves the (2,3,2)-gYBE and is unitary", rep.passed && unit,
            "gYBE " + sci(rep.residual_max), 0};
}

// ── #6: X families ──────────────────────────────────────────────────────────

inline FamilyParams random_x_params(Family f, Rng& rng) {
    FamilyParams p;
    p.family = f;
    p.alpha = rng.nonzero_complex();
    p.beta = rng.nonzero_complex();
    p.gamma = rng.nonzero_complex();
    p.delta = rng.nonzero_complex();
    return p;
}

// a draw satisfying the stated unitarity conditions (x1, x2, x3, x5 only)
inline FamilyParams unitary_condition_params(Family f, Rng& rng) {
    FamilyParams p;
    p.family = f;
    if (f == Family::X1) {
        const double t = rng.uniform(0.3, 1.5);
        p.delta = cplx{0.0, rng.integer(0, 1) ? t : -t};
        p.alpha = rng.unit_complex();
        p.beta = std::polar(t, rng.uniform(0.0, 2.0 * std::numbers::pi));
        p.lambda = std::polar(1.0 / std::sqrt(1.0 + t * t), rng.uniform(0.0, 2.0 * std::numbers::pi));
    } else {
        p.alpha = rng.unit_complex();
        p.beta = rng.unit_complex();
        p.lambda = std::polar(1.0 / std::sqrt(2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    return p;
}

inline CriterionResult criterion_x_families(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 6);
    const int n_gybe = opt.quick ? 20 : 100;
    const int n_det = opt.quick ? 10 : 50;
    const int n_rel = opt.quick ? 10 : 50;
    const int n_cond = opt.quick ? 20 : 100;
    std::ostringstream detail;
    bool ok = true;

    // every invertible family member solves the (2,3,2)-gYBE
    double worst_gybe = 0.0;
    for (Family f : {Family::X1, Family::X2, Family::X3, Family::X4, Family::X5})
        for (int t = 0; t < n_gybe; ++t)
            worst_gybe = std::max(
                worst_gybe,
                verify_gybe(build_x_family(random_x_params(f, rng)), GybeSignature(2, 3, 2), 1e-10)
                    .residual_max);
    ok = ok && worst_gybe <= 1e-10;
    detail << "x1..x5 worst gYBE " << sci(worst_gybe);

    // x6, x7 are never invertible
    double worst_det = 0.0;
    for (Family f : {Family::X6, Family::X7})
        for (int t = 0; t < n_det; ++t)
            worst_det =
                std::max(worst_det, std::abs(determinant(build_x_family(random_x_params(f, rng)))));
    ok = ok && worst_det <= 1e-10;
    detail << "; |det x6/x7| " << sci(worst_det);

    // x5(α,β) = 2·x2(iα,iβ)⁻¹
    double worst_rel = 0.0;
    const cplx iu{0.0, 1.0};
    for (int t = 0; t < n_rel; ++t) {
        FamilyParams p5;
        p5.family = Family::X5;
        p5.alpha = rng.nonzero_complex();
        p5.beta = rng.nonzero_complex();
        FamilyParams p2 = p5;
        p2.family = Family::X2;
        p2.alpha = iu * p5.alpha;
        p2.beta = iu * p5.beta;
        worst_rel = std::max(worst_rel, max_abs_diff(build_x_family(p5),
                                                     2.0 * inverse(build_x_family(p2))));
    }
    ok = ok && worst_rel <= 1e-12;
    detail << "; x5 vs 2*x2^-1 " << sci(worst_rel);

    // unitarity conditions: satisfying draws are unitary, violators fail
    double worst_unit = 0.0;
    for (Family f : {Family::X1, Family::X2, Family::X3, Family::X5})
        for (int t = 0; t < n_cond; ++t) {
            const auto cond = unitarity_conditions(unitary_condition_params(f, rng), 1e-10);
            worst_unit = std::max(worst_unit, cond.unitary_defect);
            ok = ok && cond.overall;
        }
    detail << "; condition-satisfying unitary defect " << sci(worst_unit);

    int violators_failing = 0, violators_total = 0;
    for (Family f : {Family::X1, Family::X2, Family::X3, Family::X5})
        for (int t = 0; t < n_cond; ++t) {
            FamilyParams p = unitary_condition_params(f, rng);
            switch (rng.integer(0, 2)) {
                case 0: p.alpha = 1.4 * p.alpha; break;   // breaks |alpha|=1
                case 1: p.beta = 0.6 * p.beta; break;     // breaks the beta clause
                default: p.lambda = 1.3 * p.lambda; break;  // breaks the lambda clause
            }
            ++violators_total;
            if (!unitarity_conditions(p, 1e-10).overall) ++violators_failing;
        }
    ok = ok && violators_failing == violators_total;
    detail << "; clause violators failing " << violators_failing << "/" << violators_total;

    // x4: the stated conditions admit no parameter draw — |alpha|^2 would
    // have to equal a non-positive-real quantity at every admissible delta.
    // The satisfying set is empty (vacuous half) and the numeric arbiter
    // confirms non-unitarity at the stated deltas under the modulus reading.
    const double s7 = std::sqrt(7.0) / 4.0;
    bool x4_consistent = true;
    double x4_worst_clause_gap = std::numeric_limits<double>::infinity();
    std::ostringstream x4_detail;
    for (const cplx dl : {cplx{1.0, 0.0}, cplx{1.25, s7}, cplx{1.25, -s7}}) {
        FamilyParams p;
        p.family = Family::X4;
        p.delta = dl;
        const cplx dbar = std::conj(dl);
        const double a2 = std::abs((dl - 2.0) / dbar);
        const double b2 = std::abs(dbar * dbar - 2.0 * dbar + 2.0);
        p.alpha = std::polar(std::sqrt(a2), rng.uniform(0.0, 2.0 * std::numbers::pi));
        p.beta = std::polar(std::sqrt(b2), rng.uniform(0.0, 2.0 * std::numbers::pi));
        p.lambda = std::polar(std::sqrt(1.0 / (1.0 + b2)), 0.0);
        const auto cond = unitarity_conditions(p, 1e-10);
        // arbiter and clause bookkeeping must agree: not unitary, and the
        // |alpha|^2 clause is violated by a margin no draw can close
        const double alpha_clause_defect = cond.constraints.at(1).defect;
        x4_consistent = x4_consistent && !cond.overall && !is_unitary(build_x_family(p), 1e-10) &&
                        alpha_clause_defect > 0.1;
        x4_worst_clause_gap = std::min(x4_worst_clause_gap, alpha_clause_defect);
        x4_detail << " delta=(" << dl.real() << "," << dl.imag() << ") defect "
                  << sci(cond.unitary_defect) << ";";
    }
    ok = ok && x4_consistent;
    detail << "; x4: stated conditions unsatisfiable (|alpha|^2 clause gap >= "
           << sci(x4_worst_clause_gap) << "), satisfying set empty, arbiter confirms non-unitary:"
           << x4_detail.str();

    return {6, "x-family suite (gYBE, determinants, x5/x2, unitarity conditions)", ok, detail.str(), 0};
}

// ── #7: ansatz tallies ──────────────────────────────────────────────────────

inline CriterionResult criterion_ansatz(const AcceptanceOptions&) {
    const auto pattern = SparsityPattern::xshape();
    const auto sys = enumerate_equations(pattern, GybeSignature(2, 3, 2));
    const bool raw_ok = sys.equations.size() == 116 && sys.variables.size() == 16;

    const auto after_scale = substitute(sys, {{"r22", GaussianRational(1)}});
    auto var = [&](const char* n) { return sys.variable_id(n); };
    SparsePoly eq1;  // −r36·r63·(r55 − 1)
    eq1.add_term({var("r36"), var("r63"), var("r55")}, GaussianRational(-1));
    eq1.add_term({var("r36"), var("r63")}, GaussianRational(1));
    SparsePoly eq2;  // r36·r63·(r44 − r77)
    eq2.add_term({var("r36"), var("r63"), var("r44")}, GaussianRational(1));
    eq2.add_term({var("r36"), var("r63"), var("r77")}, GaussianRational(-1));
    const bool displayed_ok = contains_equation(after_scale, eq1) && contains_equation(after_scale, eq2);

    const auto reduced = substitute(sys, {{"r22", GaussianRational(1)},
                                          {"r55", GaussianRational(1)},
                                          {"r77", std::string("r44")}});
    const bool reduced_ok = reduced.equations.size() == 108;

    std::ostringstream detail;
    detail << sys.equations.size() << " equations in " << sys.variables.size()
           << " variables; after r22=1,r55=1,r77=r44: " << reduced.equations.size()
           << "; displayed eliminating equations present: " << (displayed_ok ? "yes" : "NO");
    return {7, "x-shape ansatz enumerates 116 -> 108 equations", raw_ok && displayed_ok && reduced_ok,
            detail.str(), 0};
}

// ── #8: the scalar law for l ≥ m ────────────────────────────────────────────

inline CriterionResult criterion_scalar_law(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 8);
    const int n = opt.quick ? 60 : 500;
    int violations = 0, passes = 0;
    for (const auto& [d, m, l] : {std::tuple{2, 2, 2}, std::tuple{2, 2, 3}, std::tuple{3, 2, 2}}) {
        const GybeSignature sig(d, m, l);
        for (int t = 0; t < n; ++t) {
            const auto verdict = scalar_law_detector(rng.invertible_matrix(static_cast<int>(sig.r_dim())), sig);
            if (verdict.violation) ++violations;
            if (verdict.gybe_passed) ++passes;
        }
    }
    bool scalars_ok = true;
    for (int t = 0; t < 20; ++t) {
        const cplx lambda = rng.nonzero_complex();
        const auto verdict =
            scalar_law_detector(lambda * CMat::identity(4), GybeSignature(2, 2, 2));
        scalars_ok = scalars_ok && verdict.gybe_passed && verdict.scalar.has_value() &&
                     !verdict.violation;
    }
    const bool ok = violations == 0 && passes == 0 && scalars_ok;
    std::ostringstream detail;
    detail << 3 * n << " random invertible draws over sigs (2,2,2),(2,2,3),(3,2,2): " << passes
           << " gYBE passes, " << violations << " violations; 20 random scalars pass: "
           << (scalars_ok ? "yes" : "NO");
    return {8, "l >= m admits only scalar invertible solutions", ok, detail.str(), 0};
}

// ── #9: the diagonal split: every diagonal solves the aYBE, only scalars the bYBE ──

inline CriterionResult criterion_diagonal_split(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 9);
    const int n = opt.quick ? 60 : 500;
    int aybe_failures = 0, bybe_passes = 0, detector_violations = 0;
    for (int t = 0; t < n; ++t) {
        const int d = 2 + t % 3;
        CMat diag = rng.diagonal_matrix(d * d);
        if (is_scalar_identity(diag, 1e-6).has_value()) {  // essentially never
            --t;
            continue;
        }
        if (!verify_aybe_matrix(diag, 1e-10).passed) ++aybe_failures;
        const auto verdict = diagonal_bybe_detector(diag, 1e-10);
        if (verdict.bybe_passed) ++bybe_passes;
        if (verdict.violation) ++detector_violations;
    }
    bool scalars_ok = true;
    for (int d = 2; d <= 4; ++d) {
        const CMat s = rng.nonzero_complex() * CMat::identity(d * d);
        scalars_ok = scalars_ok && verify_aybe_matrix(s, 1e-10).passed &&
                     verify_bybe(s, 1e-10).passed;
    }
    const bool ok = aybe_failures == 0 && bybe_passes == 0 && detector_violations == 0 && scalars_ok;
    std::ostringstream detail;
    detail << n << " random non-scalar invertible diagonals (d=2..4): " << aybe_failures
           << " aYBE failures, " << bybe_passes << " bYBE passes, " << detector_violations
           << " detector violations; scalars pass both: " << (scalars_ok ? "yes" : "NO");
    return {9, "diagonals solve the aYBE, only scalars solve the bYBE", ok, detail.str(), 0};
}

// ── #10: aYBE matrix form vs index form ─────────────────────────────────────

inline CriterionResult criterion_aybe_oracles(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 10);
    const int n = opt.quick ? 50 : 300;
    double worst_gap = 0.0;
    int verdict_mismatches = 0;
    auto compare = [&](const CMat& r) {
        const auto a = verify_aybe_matrix(r, 1e-10);
        const auto b = verify_aybe_index(r, 1e-10);
        worst_gap = std::max(worst_gap, std::abs(a.residual_max - b.residual_max));
        if (a.passed != b.passed) ++verdict_mismatches;
    };
    for (int t = 0; t < n; ++t) compare(rng.matrix(t % 2 ? 9 : 4, t % 2 ? 9 : 4));
    for (int k = 1; k <= 3; ++k) compare(build_kl(k));
    for (int d = 2; d <= 4; ++d) {
        compare(build_rd(d));
        compare(build_rd(d) * swap_operator(d));
    }
    const bool ok = worst_gap <= 1e-9 && verdict_mismatches == 0;
    std::ostringstream detail;
    detail << n << " random + named matrices: verdict mismatches " << verdict_mismatches
           << ", worst residual gap " << sci(worst_gap);
    return {10, "aYBE matrix and index forms agree", ok, detail.str(), 0};
}

// ── #11: symmetry closure ───────────────────────────────────────────────────

inline CriterionResult criterion_symmetry_closure(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 11);
    const int trials = opt.quick ? 10 : 50;
    double worst = 0.0;
    int failures = 0;

    struct Source {
        std::string name;
        std::function<CMat(Rng&)> build;
        std::function<double(const CMat&)> residual;
        int local_dim;  // d for LocalConjugate
        int arity;      // m
    };
    const GybeSignature rx_sig(2, 3, 2);
    std::vector<Source> sources = {
        {"kl1 (aYBE)", [](Rng&) { return build_kl(1); },
         [](const CMat& m) { return verify_aybe_matrix(m).residual_max; }, 2, 2},
        {"rx ((2,3,2)-gYBE)", [](Rng&) { return build_rx(); },
         [&](const CMat& m) { return verify_gybe(m, rx_sig).residual_max; }, 2, 3},
        {"x2-unitary ((2,3,2)-gYBE)",
         [](Rng& r) {
             FamilyParams p = unitary_condition_params(Family::X2, r);
             return build_x_family(p);
         },
         [&](const CMat& m) { return verify_gybe(m, rx_sig).residual_max; }, 2, 3},
        {"rd(3)*P (bYBE)", [](Rng&) { return build_rd(3) * swap_operator(3); },
         [](const CMat& m) { return verify_bybe(m).residual_max; }, 3, 2},
    };

    for (const Source& src : sources) {
        for (int t = 0; t < trials; ++t) {
            const CMat base = src.build(rng);
            const std::vector<SymmetryOp> generators = {
                SymmetryOp::scale(rng.nonzero_complex()),
                SymmetryOp::inverse(),
                SymmetryOp::conjugate(),
                SymmetryOp::transpose(),
                SymmetryOp::adjoint(),
                SymmetryOp::local_conjugate(rng.invertible_matrix(src.local_dim), src.arity)};
            for (const SymmetryOp& op : generators) {
                const double res = src.residual(apply_symmetry(op, base));
                worst = std::max(worst, res);
                if (res > 1e-9) ++failures;
            }
        }
    }

    // the m ≤ l side of the closure proof, exercised on the scalar solutions
    // that sig (2,2,2) admits
    for (int t = 0; t < trials; ++t) {
        const CMat base = rng.nonzero_complex() * CMat::identity(4);
        const GybeSignature sig(2, 2, 2);
        for (const SymmetryOp& op :
             {SymmetryOp::scale(rng.nonzero_complex()), SymmetryOp::inverse(),
              SymmetryOp::adjoint(), SymmetryOp::local_conjugate(rng.invertible_matrix(2), 2)}) {
            const double res = verify_gybe(apply_symmetry(op, base), sig).residual_max;
            worst = std::max(worst, res);
            if (res > 1e-9) ++failures;
        }
    }

    std::ostringstream detail;
    detail << trials << " trials x 6 generators x 4 sources (+ scalar (2,2,2) checks): " << failures
           << " closure failures, worst residual " << sci(worst);
    return {11, "solution-preserving symmetries keep the governing equation", failures == 0,
            detail.str(), 0};
}

// ── #12: entanglement witnesses ─────────────────────────────────────────────

inline CriterionResult criterion_entanglement(const AcceptanceOptions& opt) {
    std::ostringstream detail;
    bool ok = true;

    // the CNOT witness (|00⟩+|10⟩)/√2
    const CMat cnot = controlled_increment(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    const int rank = schmidt_rank(detail::apply_to_state(cnot, {s, 0, s, 0}), 2, 2);
    ok = ok && rank == 2;
    detail << "cnot witness (|00>+|10>)/sqrt2 rank " << rank;

    for (int d = 2; d <= 3; ++d) {
        const bool ent = is_entangling(swap_operator(d), d, opt.seed).entangling;
        ok = ok && !ent;
        detail << "; swap d=" << d << (ent ? " ENTANGLING" : " non-entangling");
    }
    for (int d = 2; d <= 4; ++d) {
        const bool ent = is_entangling(build_rd(d) * swap_operator(d), d, opt.seed).entangling;
        ok = ok && ent;
        detail << "; rd*P d=" << d << (ent ? " entangling" : " NOT ENTANGLING");
    }

    const auto rx_rep = bipartition_report(build_rx(), 2, opt.seed);
    const auto& zero_row = rx_rep.rows.front();
    ok = ok && zero_row.rank_1_23 == 2 && zero_row.rank_2_13 == 2 && zero_row.rank_12_3 == 2;
    detail << "; rx |000> ranks (1|23, 2|13, 12|3) = " << zero_row.rank_1_23 << ","
           << zero_row.rank_2_13 << "," << zero_row.rank_12_3;
    return {12, "entanglement: cnot witness, swap, rd*P, rx bipartitions", ok, detail.str(), 0};
}

// ── #13: braid relations ────────────────────────────────────────────────────

inline CriterionResult criterion_braid(const AcceptanceOptions&) {
    std::ostringstream detail;
    // the bYBE representation derived from kl1 is built on kl1*P (= kl2): kl1
    // itself solves the algebraic YBE, and composing with the swap carries it
    // to the braided side
    const CMat kl1_braided = build_kl(1) * swap_operator(2);
    const auto kl_rep = verify_braid_relations(kl1_braided, GybeSignature(2, 2, 1), 4, 1e-10);
    const auto rx_rep = verify_braid_relations(build_rx(), GybeSignature(2, 3, 2), 4, 1e-10);
    const auto rx_far = verify_far_commutativity(build_rx(), GybeSignature(2, 3, 2), 4, 1e-10);
    const GybeSignature rx_sig(2, 3, 2);
    const bool guarantee = rx_sig.far_commutativity_guaranteed();
    const double kl1_raw = verify_braid_relations(build_kl(1), GybeSignature(2, 2, 1), 4, 1e-10)
                               .residual_max;
    const bool ok = kl_rep.passed && rx_rep.passed && rx_far.passed && guarantee;
    detail << "kl1*P rep n=4: " << sci(kl_rep.residual_max) << "; rx rep n=4: "
           << sci(rx_rep.residual_max) << "; rx far-comm: " << sci(rx_far.residual_max)
           << " (l>m/2 guarantee: " << (guarantee ? "holds" : "ABSENT")
           << "); raw kl1 rep YB residual " << sci(kl1_raw)
           << " (kl1 is the aYBE-side matrix; its braided image is kl1*P)";
    return {13, "braid relations for the kl1-derived and rx representations", ok, detail.str(), 0};
}

// ── #14: permutation search ─────────────────────────────────────────────────

inline CriterionResult criterion_permutation_search(const AcceptanceOptions& opt) {
    using clock = std::chrono::steady_clock;
    std::ostringstream detail;
    bool ok = true;

    auto contains = [](const std::vector<CMat>& set, const CMat& m) {
        return std::any_of(set.begin(), set.end(), [&](const CMat& s) { return s == m; });
    };
    auto inverse_closed = [&](const std::vector<CMat>& set) {
        return std::all_of(set.begin(), set.end(),
                           [&](const CMat& s) { return contains(set, transpose(s)); });
    };

    const auto t0 = clock::now();
    const auto small = search_permutation_solutions(GybeSignature(2, 2, 1), std::nullopt, false,
                                                    opt.jobs, opt.seed);
    const double small_secs = std::chrono::duration<double>(clock::now() - t0).count();
    ok = ok && small_secs < 1.0 && contains(small, CMat::identity(4)) &&
         contains(small, swap_operator(2)) && inverse_closed(small);
    detail << "(2,2,1): " << small.size() << " solutions in " << std::fixed
           << std::setprecision(3) << small_secs << "s, identity and swap present, inverse-closed "
           << (inverse_closed(small) ? "yes" : "NO");

    const auto t1 = clock::now();
    const auto large = search_permutation_solutions(GybeSignature(2, 3, 2), std::nullopt, false,
                                                    opt.jobs, opt.seed);
    const double large_secs = std::chrono::duration<double>(clock::now() - t1).count();
    ok = ok && large_secs < 300.0 && !large.empty() && inverse_closed(large);
    detail << "; (2,3,2): " << large.size() << " solutions over 40320 candidates in "
           << std::setprecision(3) << large_secs << "s, inverse-closed "
           << (inverse_closed(large) ? "yes" : "NO");
    return {14, "permutation brute-force search", ok, detail.str(), 0};
}

}  // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const Fn criteria[] = {
        acceptance::criterion_rd,           acceptance::criterion_kl,
        acceptance::criterion_cnot,         acceptance::criterion_golden,
        acceptance::criterion_rx,           acceptance::criterion_x_families,
        acceptance::criterion_ansatz,       acceptance::criterion_scalar_law,
        acceptance::criterion_diagonal_split, acceptance::criterion_aybe_oracles,
        acceptance::criterion_symmetry_closure, acceptance::criterion_entanglement,
        acceptance::criterion_braid,        acceptance::criterion_permutation_search,
    };
    std::vector<CriterionResult> results;
    for (Fn fn : criteria) {
        const auto t0 = clock::now();
        CriterionResult r = fn(opt);
        r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        // stated runtime budgets
        if (r.id == 1 && r.seconds >= 5.0) {
            r.passed = false;
            r.detail += " [exceeded 5s budget]";
        }
        if (r.id == 7 && r.seconds >= 30.0) {
            r.passed = false;
            r.detail += " [exceeded 30s budget]";
        }
        results.push_back(std::move(r));
    }
    return results;
}

// Prints one line per criterion and returns the count of unexpected
// failures.  A criterion whose red state matches its pinned signature prints
// as XFAIL and does not count against the suite; everything else red does.
inline int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
    int failures = 0, expected = 0;
    for (const auto& r : results) {
        const char* label = r.passed ? "PASS " : (r.expected_failure ? "XFAIL" : "FAIL ");
        if (!r.passed && !r.expected_failure) ++failures;
        if (r.expected_failure) ++expected;
        os << label << " #" << std::setw(2) << r.id << "  " << r.name << "  [" << std::fixed
           << std::setprecision(2) << r.seconds << "s]\n      " << r.detail << "\n";
    }
    if (failures == 0 && expected == 0)
        os << "all criteria passed\n";
    else if (failures == 0)
        os << "all criteria passed except " << expected
           << " pinned expected failure(s) (see README: Kauffman-Lomonaco vs the braided YBE)\n";
    else
        os << failures << " criteria failed\n";
    return failures;
}

}  // namespace ybx

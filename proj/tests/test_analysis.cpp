#include <catch2/catch.hpp>

#include "ybx/analysis.hpp"
#include "ybx/families.hpp"
#include "ybx/random.hpp"

using namespace ybx;

TEST_CASE("singular values") {
    const auto sv = singular_values(CMat::diagonal({3.0, 4.0}));
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == Approx(4.0).margin(1e-12));
    CHECK(sv[1] == Approx(3.0).margin(1e-12));

    Rng rng(71);
    for (double s : singular_values(rng.unitary(5))) CHECK(s == Approx(1.0).margin(1e-10));

    // rectangular input
    const auto wide = singular_values(CMat(1, 3, {1, 2, 2}));
    CHECK(wide[0] == Approx(3.0).margin(1e-12));
}

TEST_CASE("singular values recover constructed decompositions") {
    Rng rng(75);
    for (int t = 0; t < 25; ++t) {
        const int n = rng.integer(2, 5);
        std::vector<double> want(n);
        for (double& s : want) s = rng.uniform(0.0, 3.0);
        if (t % 3 == 0) want[0] = 0.0;          // rank deficiency
        if (t % 4 == 0 && n > 1) want[1] = want[n - 1];  // repeated values
        std::sort(want.rbegin(), want.rend());
        std::vector<cplx> diag(want.begin(), want.end());
        const CMat a = (rng.unitary(n) * CMat::diagonal(diag)) * rng.unitary(n);
        const auto got = singular_values(a);
        REQUIRE(got.size() == static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) CHECK(got[i] == Approx(want[i]).margin(1e-9));
    }
    // the zero matrix has rank zero
    CHECK(schmidt_rank(std::vector<cplx>(4, cplx{0, 0}), 2, 2) == 0);
}

TEST_CASE("schmidt rank") {
    // |00⟩ is a product state, the Bell pair is not
    CHECK(schmidt_rank({1, 0, 0, 0}, 2, 2) == 1);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(schmidt_rank({s, 0, 0, s}, 2, 2) == 2);
    // asymmetric splits
    CHECK(schmidt_rank({s, 0, 0, 0, 0, 0, 0, -s}, 2, 4) == 2);
    CHECK(schmidt_rank({1, 0, 0, 0, 0, 0, 0, 0}, 4, 2) == 1);
    CHECK_THROWS_AS(schmidt_rank({1, 0, 0}, 2, 2), std::invalid_argument);
}

TEST_CASE("cnot entangles, the textbook witness has rank 2") {
    const auto rep = is_entangling(controlled_increment(2, 2), 2);
    CHECK(rep.entangling);
    CHECK(rep.gate_dim == 4);
    CHECK(rep.witnesses.size() == 4 + kRandomWitnessCount);

    const double s = 1.0 / std::sqrt(2.0);
    const auto out = detail::apply_to_state(controlled_increment(2, 2), {s, 0, s, 0});
    CHECK(schmidt_rank(out, 2, 2) == 2);

    CHECK_THROWS_AS(is_entangling(CMat::identity(9), 2), std::invalid_argument);
    CHECK_THROWS_AS(is_entangling(CMat(4, 3), 2), std::invalid_argument);
}

TEST_CASE("swap never entangles") {
    for (int d = 2; d <= 3; ++d) {
        const auto rep = is_entangling(swap_operator(d), d);
        CHECK_FALSE(rep.entangling);
        for (const auto& w : rep.witnesses) CHECK(w.schmidt_rank == 1);
    }
}

TEST_CASE("diagonal entanglers act trivially on basis states") {
    // kl1 = diag(1,1,1,−1) leaves every |ij⟩ a product state, yet entangles
    // generic product inputs; this is why the witness sweep needs the random
    // batch
    const auto rep = is_entangling(build_kl(1), 2);
    CHECK(rep.entangling);
    for (const auto& w : rep.witnesses)
        if (w.input.front() == '|') CHECK(w.schmidt_rank == 1);
}

TEST_CASE("rd*P is entangling for d = 2..4") {
    for (int d = 2; d <= 4; ++d)
        CHECK(is_entangling(build_rd(d) * swap_operator(d), d).entangling);
}

TEST_CASE("entangling verdict is invariant under local unitaries") {
    Rng rng(72);
    for (const CMat& gate : {controlled_increment(2, 2), swap_operator(2), build_kl(1)}) {
        const bool base = is_entangling(gate, 2).entangling;
        for (int t = 0; t < 50; ++t) {
            const CMat moved =
                (kron(rng.unitary(2), rng.unitary(2)) * gate) * kron(rng.unitary(2), rng.unitary(2));
            CHECK(is_entangling(moved, 2).entangling == base);
        }
    }
}

TEST_CASE("rx bipartition report") {
    const auto rep = bipartition_report(build_rx(), 2);
    REQUIRE_FALSE(rep.rows.empty());
    const auto& zero = rep.rows.front();
    CHECK(zero.input == "|000>");
    // rx|000⟩ = (|000⟩ − |111⟩)/√2: rank 2 across every cut
    CHECK(zero.rank_1_23 == 2);
    CHECK(zero.rank_2_13 == 2);
    CHECK(zero.rank_12_3 == 2);
    CHECK(rep.entangling_every_cut);
    CHECK_THROWS_AS(bipartition_report(CMat::identity(4), 2), std::invalid_argument);
}

TEST_CASE("cnot decomposition residuals") {
    CHECK(check_cnot_decomposition(2, 1e-12).residual_max < 1e-15);
    for (int d : {3, 5}) CHECK(check_cnot_decomposition(d, 1e-12).passed);

    // sensitivity: perturbing rd's last diagonal entry moves the residual
    // linearly (the Fourier conjugation spreads ε across a d×d block)
    const int d = 3;
    const double eps = 1e-3;
    CMat rd = build_rd(d);
    rd(d * d - 1, d * d - 1) += eps;
    const CMat f = fourier(d);
    const CMat id = CMat::identity(d);
    const CMat back = (kron(id, adjoint(f)) * rd) * kron(id, f);
    const double res = max_abs_diff(back, controlled_increment(2, d));
    CHECK(res > eps / (2 * d));
    CHECK(res < 2 * eps);
}

TEST_CASE("scalar law detector") {
    const GybeSignature sig(2, 2, 2);
    const auto scalar_verdict = scalar_law_detector(cplx{2, -1} * CMat::identity(4), sig);
    CHECK(scalar_verdict.gybe_passed);
    CHECK(scalar_verdict.scalar.has_value());
    CHECK_FALSE(scalar_verdict.violation);

    Rng rng(73);
    for (int t = 0; t < 100; ++t) {
        const auto verdict = scalar_law_detector(rng.invertible_matrix(4), sig);
        CHECK_FALSE(verdict.gybe_passed);
        CHECK_FALSE(verdict.violation);
    }

    // the proof's terminal identity: (R⊗I^l) = (I^l⊗R) holds only for scalars
    const CMat lam = cplx{0.3, 0.8} * CMat::identity(4);
    CHECK(max_abs_diff(kron(lam, CMat::identity(4)), kron(CMat::identity(4), lam)) < 1e-15);
    const CMat nonscalar = rng.invertible_matrix(4);
    CHECK(max_abs_diff(kron(nonscalar, CMat::identity(4)), kron(CMat::identity(4), nonscalar)) >
          1e-3);

    CHECK_THROWS_AS(scalar_law_detector(CMat::identity(4), GybeSignature(2, 2, 1)),
                    std::invalid_argument);  // l < m
    CHECK_THROWS_AS(scalar_law_detector(CMat(4, 4), sig), std::invalid_argument);  // singular
}

TEST_CASE("diagonal bYBE detector") {
    const auto scalar_verdict = diagonal_bybe_detector(cplx{0, 2} * CMat::identity(9));
    CHECK(scalar_verdict.bybe_passed);
    CHECK_FALSE(scalar_verdict.violation);

    Rng rng(74);
    for (int t = 0; t < 100; ++t) {
        const int d = 2 + t % 3;
        const CMat diag = rng.diagonal_matrix(d * d);
        if (is_scalar_identity(diag, 1e-8).has_value()) continue;
        const auto verdict = diagonal_bybe_detector(diag);
        CHECK_FALSE(verdict.bybe_passed);
        CHECK_FALSE(verdict.violation);
        CHECK(verify_aybe_matrix(diag, 1e-10).passed);  // the theorem-2 side
    }

    CHECK_THROWS_AS(diagonal_bybe_detector(swap_operator(2)), std::invalid_argument);  // not diagonal
    CHECK_THROWS_AS(diagonal_bybe_detector(CMat::diagonal({1, 0, 1, 1})), std::invalid_argument);
}

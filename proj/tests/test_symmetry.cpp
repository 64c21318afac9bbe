#include <catch2/catch.hpp>

#include "ybx/families.hpp"
#include "ybx/random.hpp"
#include "ybx/symmetry.hpp"

using namespace ybx;

TEST_CASE("apply_symmetry basics") {
    CHECK(apply_symmetry(SymmetryOp::scale(2.0), CMat::identity(4)) == 2.0 * CMat::identity(4));

    Rng rng(51);
    const CMat r = rng.matrix(4, 4);
    CHECK(apply_symmetry(SymmetryOp::local_conjugate(CMat::identity(2), 2), r) == r);
    CHECK(apply_symmetry(SymmetryOp::adjoint(), r) ==
          apply_symmetry(SymmetryOp::conjugate(), apply_symmetry(SymmetryOp::transpose(), r)));
}

TEST_CASE("scale(i) then adjoint on kl1 gives diag(-i,-i,-i,i)") {
    const cplx i{0, 1};
    CMat m = apply_symmetry(SymmetryOp::scale(i), build_kl(1));
    m = apply_symmetry(SymmetryOp::adjoint(), m);
    CHECK(max_abs_diff(m, CMat::diagonal({-i, -i, -i, i})) < 1e-15);
}

TEST_CASE("inverse is an involution on rx") {
    const CMat rx = build_rx();
    CMat m = apply_symmetry(SymmetryOp::inverse(), rx);
    m = apply_symmetry(SymmetryOp::inverse(), m);
    CHECK(max_abs_diff(m, rx) < 1e-12);
}

TEST_CASE("local conjugation by a random unitary preserves the bYBE of rd*P") {
    Rng rng(52);
    for (int d = 2; d <= 4; ++d) {
        const CMat source = build_rd(d) * swap_operator(d);
        const CMat q = rng.unitary(d);
        const CMat moved = apply_symmetry(SymmetryOp::local_conjugate(q, 2), source);
        CHECK(verify_bybe(moved, 1e-9).passed);
    }
}

TEST_CASE("symmetry closure on the named solutions") {
    Rng rng(53);
    const GybeSignature sig232(2, 3, 2);

    for (int t = 0; t < 8; ++t) {
        const std::vector<SymmetryOp> gens = {
            SymmetryOp::scale(rng.nonzero_complex()), SymmetryOp::inverse(),
            SymmetryOp::conjugate(),                  SymmetryOp::transpose(),
            SymmetryOp::adjoint(),                    SymmetryOp::local_conjugate(rng.invertible_matrix(2), 3)};
        for (const auto& op : gens) {
            CHECK(verify_gybe(apply_symmetry(op, build_rx()), sig232, 1e-9).passed);
        }
        // aYBE side: kl1; bYBE side: rd(2)*P (local conjugation uses 2×2 Q, arity 2)
        const CMat q2 = rng.invertible_matrix(2);
        CHECK(verify_aybe_matrix(
                  apply_symmetry(SymmetryOp::local_conjugate(q2, 2), build_kl(1)), 1e-9)
                  .passed);
        CHECK(verify_bybe(apply_symmetry(SymmetryOp::local_conjugate(q2, 2),
                                         build_rd(2) * swap_operator(2)),
                          1e-9)
                  .passed);
    }
}

TEST_CASE("unitarity is preserved by the unitary-compatible symmetries") {
    Rng rng(54);
    const CMat u = build_rx();
    CHECK(is_unitary(apply_symmetry(SymmetryOp::adjoint(), u), 1e-12));
    CHECK(is_unitary(apply_symmetry(SymmetryOp::conjugate(), u), 1e-12));
    CHECK(is_unitary(apply_symmetry(SymmetryOp::transpose(), u), 1e-12));
    CHECK(is_unitary(apply_symmetry(SymmetryOp::inverse(), u), 1e-10));
    CHECK(is_unitary(apply_symmetry(SymmetryOp::scale(rng.unit_complex()), u), 1e-12));
    CHECK(is_unitary(apply_symmetry(SymmetryOp::local_conjugate(rng.unitary(2), 3), u), 1e-9));
}

TEST_CASE("degenerate operations are rejected") {
    CHECK_THROWS_AS(SymmetryOp::scale(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SymmetryOp::local_conjugate(CMat(2, 3), 2), std::invalid_argument);

    const CMat singular(2, 2, {1, 0, 0, 0});
    CHECK_THROWS_AS(apply_symmetry(SymmetryOp::local_conjugate(singular, 2), CMat::identity(4)),
                    std::invalid_argument);

    // invertible but past the condition cap
    const CMat nearly(2, 2, {1, 0, 0, 1e-14});
    CHECK_THROWS_AS(apply_symmetry(SymmetryOp::local_conjugate(nearly, 2), CMat::identity(4)),
                    std::invalid_argument);

    // dimension mismatch between Q^{⊗m} and the matrix
    CHECK_THROWS_AS(apply_symmetry(SymmetryOp::local_conjugate(CMat::identity(3), 2),
                                   CMat::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("orbit_sample walks and verifies") {
    const GybeSignature sig(2, 3, 2);
    Rng rng(55);
    const auto orbit = orbit_sample(
        build_rx(), sig,
        {SymmetryOp::inverse(), SymmetryOp::scale(cplx{0, 1}), SymmetryOp::adjoint(),
         SymmetryOp::local_conjugate(rng.unitary(2), 3)},
        1e-9);
    CHECK(orbit.size() == 4);

    // involution: inverse twice returns to the start
    const auto twice = orbit_sample(build_rx(), sig, {SymmetryOp::inverse(), SymmetryOp::inverse()});
    CHECK(max_abs_diff(twice.back(), build_rx()) < 1e-12);

    // a non-solution start aborts with diagnostics at the first step
    CHECK_THROWS_AS(orbit_sample(rng.invertible_matrix(8), sig, {SymmetryOp::scale(2.0)}),
                    std::runtime_error);
}

TEST_CASE("symmetry scripts parse") {
    int loads = 0;
    auto loader = [&](const std::string& path) {
        ++loads;
        CHECK(path == "q.json");
        return CMat::identity(2);
    };
    const auto ops = parse_symmetry_script("scale:0,1;adjoint;localconj:@q.json", 2, loader);
    REQUIRE(ops.size() == 3);
    CHECK(ops[0].kind == SymmetryOp::Kind::Scale);
    CHECK(ops[0].lambda == cplx{0, 1});
    CHECK(ops[1].kind == SymmetryOp::Kind::Adjoint);
    CHECK(ops[2].kind == SymmetryOp::Kind::LocalConjugate);
    CHECK(loads == 1);

    CHECK_THROWS_AS(parse_symmetry_script("frobnicate", 2, loader), std::invalid_argument);
    CHECK_THROWS_AS(parse_symmetry_script("scale:1", 2, loader), std::invalid_argument);
    CHECK_THROWS_AS(parse_symmetry_script("localconj:q.json", 2, loader), std::invalid_argument);
}

// Seeded random generators for matrices, states and parameters.  Everything
// downstream (tests, the acceptance suite, witness sampling) draws through
// these so that runs are reproducible from a single seed.

#pragma once

#include <random>

#include "ybx/matrix.hpp"

namespace ybx {

class Rng {
public:
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : eng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }

    cplx complex_gaussian() { return {gaussian(), gaussian()}; }

    // modulus in [0.4, 1.6], uniform phase: bounded away from 0 and from
    // overflow-prone magnitudes, suitable for family parameters
    cplx nonzero_complex() {
        const double mod = uniform(0.4, 1.6);
        const double phase = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(mod, phase);
    }

    cplx unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

    int integer(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    CMat matrix(int nrows, int ncols) {
        CMat m(nrows, ncols);
        for (cplx& z : m.a) z = complex_gaussian();
        return m;
    }

    // Gaussian matrix retried until comfortably invertible
    CMat invertible_matrix(int n) {
        for (;;) {
            CMat m = matrix(n, n);
            if (condition_estimate(m) < 1e8) return m;
        }
    }

    CMat diagonal_matrix(int n) {
        std::vector<cplx> d(n);
        for (cplx& z : d) z = nonzero_complex();
        return CMat::diagonal(d);
    }

    // Haar-ish unitary via Gram-Schmidt on a Gaussian matrix
    CMat unitary(int n) {
        CMat m = matrix(n, n);
        for (int c = 0; c < n; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                cplx proj = 0.0;
                for (int r = 0; r < n; ++r) proj += std::conj(m(r, prev)) * m(r, c);
                for (int r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
            }
            double nrm = 0.0;
            for (int r = 0; r < n; ++r) nrm += std::norm(m(r, c));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) return unitary(n);  // degenerate draw, retry
            for (int r = 0; r < n; ++r) m(r, c) /= nrm;
        }
        return m;
    }

    // normalized complex Gaussian d-vector
    std::vector<cplx> state(int d) {
        std::vector<cplx> v(d);
        double nrm = 0.0;
        for (cplx& z : v) {
            z = complex_gaussian();
            nrm += std::norm(z);
        }
        nrm = std::sqrt(nrm);
        for (cplx& z : v) z /= nrm;
        return v;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace ybx

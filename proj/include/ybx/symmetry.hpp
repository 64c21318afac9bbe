// The solution-preserving transformations of a gYBE solution: scaling,
// inversion, complex conjugation, transposition (hence adjoint), and local
// conjugation R → Q^{⊗m} R (Q^{−1})^{⊗m} by any non-singular d×d matrix Q.
// Orbit sampling applies a script of these and verifies every intermediate
// against the governing signature — closure is guaranteed, so a verification
// failure flags a transcription bug rather than expected behavior.

#pragma once

#include <sstream>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/verify.hpp"

namespace ybx {

struct SymmetryOp {
    enum class Kind { Scale, Inverse, Conjugate, Transpose, Adjoint, LocalConjugate };

    Kind kind = Kind::Scale;
    cplx lambda{1.0, 0.0};  // Scale
    CMat q;                 // LocalConjugate
    int arity = 2;          // LocalConjugate: the m of V^{⊗m}

    static SymmetryOp make(Kind k) {
        SymmetryOp op;
        op.kind = k;
        return op;
    }
    static SymmetryOp scale(cplx lambda) {
        if (lambda == cplx{0.0, 0.0}) throw std::invalid_argument("SymmetryOp: scale by zero");
        SymmetryOp op = make(Kind::Scale);
        op.lambda = lambda;
        return op;
    }
    static SymmetryOp inverse() { return make(Kind::Inverse); }
    static SymmetryOp conjugate() { return make(Kind::Conjugate); }
    static SymmetryOp transpose() { return make(Kind::Transpose); }
    static SymmetryOp adjoint() { return make(Kind::Adjoint); }
    static SymmetryOp local_conjugate(CMat q, int arity) {
        if (!q.square()) throw std::invalid_argument("SymmetryOp: Q must be square");
        if (arity < 1) throw std::invalid_argument("SymmetryOp: arity must be positive");
        SymmetryOp op = make(Kind::LocalConjugate);
        op.q = std::move(q);
        op.arity = arity;
        return op;
    }

    std::string name() const {
        switch (kind) {
            case Kind::Scale: return "scale";
            case Kind::Inverse: return "inverse";
            case Kind::Conjugate: return "conjugate";
            case Kind::Transpose: return "transpose";
            case Kind::Adjoint: return "adjoint";
            case Kind::LocalConjugate: return "localconj";
        }
        return "?";
    }
};

constexpr double kLocalConjugateConditionCap = 1e12;

inline CMat apply_symmetry(const SymmetryOp& op, const CMat& r) {
    if (!r.square()) throw std::invalid_argument("apply_symmetry: matrix must be square");
    switch (op.kind) {
        case SymmetryOp::Kind::Scale:
            return op.lambda * r;
        case SymmetryOp::Kind::Inverse:
            return inverse(r);
        case SymmetryOp::Kind::Conjugate:
            return conjugate(r);
        case SymmetryOp::Kind::Transpose:
            return transpose(r);
        case SymmetryOp::Kind::Adjoint:
            return adjoint(r);
        case SymmetryOp::Kind::LocalConjugate: {
            long long dim = 1;
            for (int i = 0; i < op.arity; ++i) dim *= op.q.nrows;
            if (dim != r.nrows)
                throw std::invalid_argument(
                    "apply_symmetry: Q^{⊗m} dimension does not match the matrix");
            if (condition_estimate(op.q) > kLocalConjugateConditionCap)
                throw std::invalid_argument("apply_symmetry: Q is too ill-conditioned");
            const CMat qm = kron_pow(op.q, op.arity);
            const CMat qmi = kron_pow(inverse(op.q), op.arity);
            return (qm * r) * qmi;
        }
    }
    throw std::logic_error("apply_symmetry: unreachable");
}

// Left-fold application of `ops`; each intermediate is appended to the result
// after verifying it still solves the (d,m,l)-gYBE.  Closure is a theorem, so
// a residual above tolerance aborts with diagnostics.
inline std::vector<CMat> orbit_sample(const CMat& r, const GybeSignature& sig,
                                      const std::vector<SymmetryOp>& ops, double tol = 1e-9) {
    if (r.nrows != sig.r_dim())
        throw std::invalid_argument("orbit_sample: matrix dimension does not match signature");
    std::vector<CMat> orbit;
    CMat current = r;
    for (size_t i = 0; i < ops.size(); ++i) {
        current = apply_symmetry(ops[i], current);
        const VerifyReport report = verify_gybe(current, sig, tol);
        if (!report.passed) {
            std::ostringstream msg;
            msg << "orbit_sample: step " << i + 1 << " (" << ops[i].name()
                << ") broke the gYBE, residual " << report.residual_max
                << " — symmetry closure violated, suspect a transcription bug";
            throw std::runtime_error(msg.str());
        }
        orbit.push_back(current);
    }
    return orbit;
}

// ── Symmetry scripts (CLI surface) ──────────────────────────────────────────
//
// Scripts are ';'-separated steps: `scale:re,im`, `inverse`, `conjugate`,
// `transpose`, `adjoint`, `localconj:@q.json` (the matrix is loaded by the
// caller through the loader callback, so this header stays IO-free).

template <typename MatrixLoader>
std::vector<SymmetryOp> parse_symmetry_script(const std::string& script, int arity,
                                              MatrixLoader&& load_matrix) {
    std::vector<SymmetryOp> ops;
    std::stringstream ss(script);
    std::string step;
    while (std::getline(ss, step, ';')) {
        if (step.empty()) continue;
        const auto colon = step.find(':');
        const std::string verb = step.substr(0, colon);
        const std::string arg = colon == std::string::npos ? "" : step.substr(colon + 1);
        if (verb == "scale") {
            const auto comma = arg.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("symmetry script: scale wants re,im");
            ops.push_back(SymmetryOp::scale(
                cplx{std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1))}));
        } else if (verb == "inverse") {
            ops.push_back(SymmetryOp::inverse());
        } else if (verb == "conjugate") {
            ops.push_back(SymmetryOp::conjugate());
        } else if (verb == "transpose") {
            ops.push_back(SymmetryOp::transpose());
        } else if (verb == "adjoint") {
            ops.push_back(SymmetryOp::adjoint());
        } else if (verb == "localconj") {
            if (arg.empty() || arg[0] != '@')
                throw std::invalid_argument("symmetry script: localconj wants @file.json");
            ops.push_back(SymmetryOp::local_conjugate(load_matrix(arg.substr(1)), arity));
        } else {
            throw std::invalid_argument("symmetry script: unknown step '" + verb + "'");
        }
    }
    return ops;
}

}  // namespace ybx

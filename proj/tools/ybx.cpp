// ybx — construct, transform and verify Yang-Baxter solutions over the JSON
// matrix interchange format.
//
//   ybx construct --family rd --d 3 -o rd3.json
//   ybx verify --eq aybe --in rd3.json
//   ybx verify --eq gybe --sig 2,3,2 --in rx.json
//   ybx orbit "scale:0,1;adjoint" --in kl2.json --sig 2,2,1 -o out.json
//   ybx ansatz --pattern xshape --sig 2,3,2 --count
//   ybx search --sig 2,3,2 --jobs 4
//   ybx entangle --gate @cnot.json --d 2
//   ybx selftest [--quick]
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "ybx/acceptance.hpp"
#include "ybx/io.hpp"
#include "ybx/symmetry.hpp"

namespace {

using namespace ybx;

cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return cplx{std::stod(text), 0.0};
    return cplx{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

GybeSignature parse_sig(const std::string& text) {
    int d, m, l;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> d >> c1 >> m >> c2 >> l) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("--sig wants d,m,l");
    return GybeSignature(d, m, l);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << j.dump(2) << "\n";
    }
}

std::string strip_at(const std::string& path) {
    return (!path.empty() && path[0] == '@') ? path.substr(1) : path;
}

struct CommonOpts {
    double tol = 1e-10;
    uint64_t seed = 20240915;
    int jobs = 1;
    bool force = false;
};

int run_construct(const std::string& family, int d, const std::string& alpha,
                  const std::string& beta, const std::string& gamma, const std::string& delta,
                  const std::string& lambda, const std::string& out_path) {
    FamilyParams p;
    p.family = family_from_string(family);
    p.d = d;
    if (!alpha.empty()) p.alpha = parse_complex(alpha);
    if (!beta.empty()) p.beta = parse_complex(beta);
    if (!gamma.empty()) p.gamma = parse_complex(gamma);
    if (!delta.empty()) p.delta = parse_complex(delta);
    if (!lambda.empty()) p.lambda = parse_complex(lambda);
    emit(matrix_to_json(build_family(p)), out_path);
    return 0;
}

int run_verify(const std::string& eq, const std::string& in_path, const std::string& sig_text,
               const CommonOpts& common) {
    const CMat r = load_matrix(in_path);
    VerifyReport report;
    if (eq == "bybe") {
        report = verify_bybe(r, common.tol);
    } else if (eq == "aybe") {
        report = verify_aybe_matrix(r, common.tol);
        const VerifyReport index_form = verify_aybe_index(r, common.tol);
        if (index_form.passed != report.passed)
            std::cerr << "warning: aYBE matrix and index forms disagree\n";
    } else if (eq == "gybe") {
        if (sig_text.empty()) throw std::invalid_argument("verify --eq gybe wants --sig d,m,l");
        report = verify_gybe(r, parse_sig(sig_text), common.tol);
    } else {
        throw std::invalid_argument("--eq must be bybe, aybe or gybe");
    }
    emit(report_to_json(report), "");
    return report.passed ? 0 : 1;
}

int run_orbit(const std::string& script, const std::string& in_path, const std::string& sig_text,
              const std::string& out_path, const CommonOpts& common) {
    if (sig_text.empty()) throw std::invalid_argument("orbit wants --sig d,m,l");
    const GybeSignature sig = parse_sig(sig_text);
    const CMat r = load_matrix(in_path);
    const auto ops =
        parse_symmetry_script(script, sig.m, [](const std::string& path) { return load_matrix(path); });
    const auto orbit = orbit_sample(r, sig, ops, common.tol);
    if (orbit.empty()) throw std::invalid_argument("orbit: empty symmetry script");
    for (size_t i = 0; i < orbit.size(); ++i)
        std::cerr << "step " << i + 1 << " (" << ops[i].name() << "): gYBE residual "
                  << verify_gybe(orbit[i], sig, common.tol).residual_max << "\n";
    emit(matrix_to_json(orbit.back()), out_path);
    return 0;
}

int run_ansatz(const std::string& pattern_name, const std::string& sig_text, bool count_only,
               const std::string& subst_text, const std::string& out_path) {
    if (sig_text.empty()) throw std::invalid_argument("ansatz wants --sig d,m,l");
    const GybeSignature sig = parse_sig(sig_text);
    SparsityPattern pattern = [&] {
        if (pattern_name == "xshape") return SparsityPattern::xshape();
        if (pattern_name == "diagonal")
            return SparsityPattern::diagonal(static_cast<int>(sig.r_dim()));
        throw std::invalid_argument("--pattern must be xshape or diagonal");
    }();
    AnsatzSystem sys = enumerate_equations(pattern, sig);
    if (!subst_text.empty()) {
        std::map<std::string, VarAssignment> assignments;
        std::stringstream ss(subst_text);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            const auto eqpos = item.find('=');
            if (eqpos == std::string::npos)
                throw std::invalid_argument("--subst wants name=value pairs separated by ';'");
            const std::string name = item.substr(0, eqpos);
            const std::string value = item.substr(eqpos + 1);
            if (!value.empty() && (std::isalpha(static_cast<unsigned char>(value[0])))) {
                assignments[name] = value;  // variable alias
            } else {
                const auto comma = value.find(',');
                const long long re = std::stoll(value.substr(0, comma));
                const long long im =
                    comma == std::string::npos ? 0 : std::stoll(value.substr(comma + 1));
                assignments[name] = GaussianRational(re, im);
            }
        }
        sys = substitute(sys, assignments);
    }
    if (count_only) {
        emit(json{{"equations", sys.equations.size()}, {"variables", sys.variables.size()}},
             out_path);
    } else {
        emit(system_to_json(sys), out_path);
    }
    return 0;
}

int run_search(const std::string& sig_text, int limit, const std::string& out_path,
               const CommonOpts& common) {
    if (sig_text.empty()) throw std::invalid_argument("search wants --sig d,m,l");
    const GybeSignature sig = parse_sig(sig_text);
    const auto sols = search_permutation_solutions(
        sig, limit > 0 ? std::optional<size_t>(limit) : std::nullopt, common.force, common.jobs,
        common.seed);
    json arr = json::array();
    for (const CMat& m : sols) arr.push_back(matrix_to_json(m));
    std::cerr << sols.size() << " permutation solution(s)\n";
    emit(json{{"signature", {sig.d, sig.m, sig.l}}, {"solutions", std::move(arr)}}, out_path);
    return 0;
}

int run_entangle(const std::string& gate_path, int d, const CommonOpts& common) {
    const CMat u = load_matrix(strip_at(gate_path));
    if (u.square() && u.nrows == d * d) {
        const auto rep = is_entangling(u, d, common.seed);
        emit(entanglement_to_json(rep), "");
        return 0;
    }
    if (u.square() && u.nrows == d * d * d) {
        const auto rep = bipartition_report(u, d, common.seed);
        emit(bipartition_to_json(rep), "");
        return 0;
    }
    throw std::invalid_argument("entangle: gate must be d^2 x d^2 (or d^3 x d^3 for the "
                                "three-factor bipartition report)");
}

int run_selftest(bool quick, const CommonOpts& common) {
    AcceptanceOptions opt;
    opt.quick = quick;
    opt.seed = common.seed;
    opt.jobs = common.jobs;
    return print_acceptance(run_acceptance(opt), std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Baxter equation toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--tol", common.tol, "verification tolerance")->capture_default_str();
    app.add_option("--seed", common.seed, "random seed")->capture_default_str();
    app.add_option("--jobs", common.jobs, "worker threads for search")->capture_default_str();
    app.add_flag("--force", common.force, "override dimension caps");
    app.fallthrough();

    std::string family, alpha, beta, gamma, delta, lambda, out_path, in_path, sig_text, eq;
    std::string script, pattern_name = "xshape", subst_text, gate_path;
    int d = 2, limit = 0;
    bool count_only = false, quick = false;

    auto* construct = app.add_subcommand("construct", "build a named family member");
    construct->add_option("--family", family, "rd, kl1..kl3, rx, x1..x7")->required();
    construct->add_option("--d", d, "dimension (rd)");
    construct->add_option("--alpha", alpha, "complex re,im");
    construct->add_option("--beta", beta, "complex re,im");
    construct->add_option("--gamma", gamma, "complex re,im");
    construct->add_option("--delta", delta, "complex re,im");
    construct->add_option("--lambda", lambda, "complex global scale re,im");
    construct->add_option("-o,--out", out_path, "output file (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "verify a matrix against an equation");
    verify->add_option("--eq", eq, "bybe, aybe or gybe")->required();
    verify->add_option("--in", in_path, "matrix JSON file")->required();
    verify->add_option("--sig", sig_text, "d,m,l (gybe)");

    auto* orbit = app.add_subcommand("orbit", "apply a symmetry script, verifying each step");
    orbit->add_option("script", script, "e.g. scale:0,1;adjoint;localconj:@q.json")->required();
    orbit->add_option("--in", in_path, "matrix JSON file")->required();
    orbit->add_option("--sig", sig_text, "d,m,l of the governing gYBE")->required();
    orbit->add_option("-o,--out", out_path, "output file (stdout when absent)");

    auto* ansatz = app.add_subcommand("ansatz", "enumerate the polynomial system of a pattern");
    ansatz->add_option("--pattern", pattern_name, "xshape or diagonal")->capture_default_str();
    ansatz->add_option("--sig", sig_text, "d,m,l")->required();
    ansatz->add_flag("--count", count_only, "print equation/variable counts only");
    ansatz->add_option("--subst", subst_text, "substitutions, e.g. r22=1;r77=r44");
    ansatz->add_option("-o,--out", out_path, "output file (stdout when absent)");

    auto* search = app.add_subcommand("search", "brute-force permutation solutions");
    search->add_option("--sig", sig_text, "d,m,l")->required();
    search->add_option("--limit", limit, "stop after this many solutions");
    search->add_option("-o,--out", out_path, "output file (stdout when absent)");

    auto* entangle = app.add_subcommand("entangle", "entanglement witness report for a gate");
    entangle->add_option("--gate", gate_path, "matrix JSON file (@file accepted)")->required();
    entangle->add_option("--d", d, "local dimension")->required();

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_flag("--quick", quick, "reduced draw counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed())
            return run_construct(family, d, alpha, beta, gamma, delta, lambda, out_path);
        if (verify->parsed()) return run_verify(eq, in_path, sig_text, common);
        if (orbit->parsed()) return run_orbit(script, in_path, sig_text, out_path, common);
        if (ansatz->parsed())
            return run_ansatz(pattern_name, sig_text, count_only, subst_text, out_path);
        if (search->parsed()) return run_search(sig_text, limit, out_path, common);
        if (entangle->parsed()) return run_entangle(gate_path, d, common);
        if (selftest->parsed()) return run_selftest(quick, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

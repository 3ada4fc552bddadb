// Command-line surface: bracket entries, central vectors, verification
// suites. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 horizon exhausted.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agd/errors.hpp"
#include "agd/verify.hpp"

using nlohmann::json;
using namespace agd;

namespace {

struct RunConfig {
    std::string family;
    long rank = 2;
    std::string t_text; // rational parameter value, empty means unset
    bool symbolic_t = false;
    long horizon = 6;
    long max_mode = 2;
    std::string format = "text";
    unsigned long seed = 1;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--family", cfg.family,
                    "algebra family: glT, poT (operator towers) or gl, so, sp (current algebras)");
    cmd->add_option("--rank", cfg.rank, "rank of the current algebra (gl_n, so_{2n+1}, sp_{2n})");
    cmd->add_option("--t-eval", cfg.t_text, "evaluate the tower parameter at this rational");
    cmd->add_flag("--symbolic-t", cfg.symbolic_t, "keep the tower parameter symbolic");
    cmd->add_option("--horizon", cfg.horizon, "coefficient window for operator computations");
    cmd->add_option("--max-mode", cfg.max_mode, "largest action mode checked by central suites");
    cmd->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized property suites");
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 2;
}

Rat parse_rational(const std::string& text) {
    Rat q(text);
    q.canonicalize();
    return q;
}

ShiftExponent tower_param(const RunConfig& cfg) {
    if (cfg.symbolic_t || cfg.t_text.empty()) return ShiftExponent::T();
    return ShiftExponent(parse_rational(cfg.t_text));
}

std::string param_text(const RunConfig& cfg) {
    return cfg.symbolic_t || cfg.t_text.empty() ? "T" : cfg.t_text;
}

LieData current_algebra(const RunConfig& cfg) {
    if (cfg.rank < 1) throw std::invalid_argument("--rank must be positive");
    if (cfg.family == "so") return LieData::so(2 * cfg.rank + 1);
    if (cfg.family == "sp") return LieData::sp(2 * cfg.rank);
    if (cfg.family.empty() || cfg.family == "gl") return LieData::gl(cfg.rank);
    throw std::invalid_argument("--family must be gl, so or sp for this command");
}

json report_json(const CheckReport& r) {
    return json{{"check", r.check}, {"inputs", r.inputs},     {"lhs", r.lhs},
                {"rhs", r.rhs},     {"residual", r.residual}, {"pass", r.pass}};
}

int emit_reports(const RunConfig& cfg, const std::string& suite,
                 const std::vector<CheckReport>& rows) {
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (cfg.format == "json") {
        json out{{"command", "verify"},
                 {"suite", suite},
                 {"family", cfg.family.empty() ? "gl" : cfg.family},
                 {"param", param_text(cfg)},
                 {"seed", cfg.seed},
                 {"pass", all},
                 {"reports", json::array()}};
        for (const auto& r : rows) out["reports"].push_back(report_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check << " [" << r.inputs << "]"
                      << (r.pass ? "" : " residual: " + r.residual) << "\n";
        std::cout << (all ? "OK" : "FAILED") << " (" << rows.size() << " checks)\n";
    }
    return all ? 0 : 1;
}

int run_bracket(const RunConfig& cfg, long i, long j) {
    std::string family = cfg.family.empty() ? "glT" : cfg.family;
    if (family != "glT" && family != "poT")
        return usage_error("bracket needs --family glT or poT");
    if (cfg.horizon < 1) return usage_error("--horizon must be positive");
    WAlgebra w = family == "glT" ? build_w_gl(tower_param(cfg), cfg.horizon)
                                 : build_w_po(tower_param(cfg), cfg.horizon);
    if (i < 0 || j < 0 || !w.brackets.has_offset(i) || !w.brackets.has_offset(j))
        return usage_error("generator offsets out of range for this family and horizon");
    LambdaPoly entry = w.brackets.entry(i, j);
    if (cfg.format == "json") {
        json out{{"command", "bracket"}, {"family", family}, {"param", param_text(cfg)},
                 {"horizon", cfg.horizon}, {"i", i},         {"j", j},
                 {"result", entry.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "{u[" << i << "] l u[" << j << "]} = " << entry.str() << "\n";
    }
    return 0;
}

int run_ssvec(const RunConfig& cfg, long m) {
    if (m < 1) return usage_error("--m must be positive");
    std::string family = cfg.family.empty() ? "gl" : cfg.family;
    UEnvElement v;
    LieData g = LieData::gl(1);
    if (family == "gl") {
        g = LieData::gl(cfg.rank);
        v = cfg.symbolic_t ? ss_vector_interp(m, cfg.rank, SSVariant::anti)
                           : ss_vector_A(m, cfg.rank, SSVariant::anti);
    } else if (family == "so" || family == "sp") {
        if (m % 2 != 0) return usage_error("so/sp vectors exist at even width only");
        g = current_algebra(cfg);
        v = ss_vector_BC(m, g);
    } else {
        return usage_error("ssvec needs --family gl, so or sp");
    }
    if (cfg.format == "json") {
        json out{{"command", "ssvec"}, {"family", family}, {"rank", cfg.rank},
                 {"m", m},             {"symbolic", cfg.symbolic_t},
                 {"result", v.str(g)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << v.str(g) << "\n";
    }
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<CheckReport> rows;
    if (suite == "qcoeff") {
        rows = verify_qcoeff();
    } else if (suite == "skew") {
        rows = verify_skew(3, std::max(cfg.horizon, 6L));
    } else if (suite == "jacobi") {
        std::string family = cfg.family.empty() ? "glT" : cfg.family;
        if (family != "glT" && family != "poT")
            return usage_error("jacobi needs --family glT or poT");
        Rat t = cfg.t_text.empty() ? Rat(2) : parse_rational(cfg.t_text);
        if (t.get_den() != 1 || t < 1) return usage_error("jacobi needs a positive integer --t-eval");
        long tl = static_cast<long>(t.get_num().get_si());
        rows = verify_jacobi(family == "glT" ? WFamily::GlT : WFamily::PoT, tl,
                             std::max(cfg.horizon, tl + 3));
    } else if (suite == "selfadj") {
        rows = verify_selfadj(std::max(cfg.horizon, 8L));
    } else if (suite == "invert") {
        rows = verify_invert(cfg.seed, 20, std::max(cfg.horizon, 8L));
    } else if (suite == "central") {
        rows = verify_central(current_algebra(cfg), 2, cfg.max_mode);
    } else if (suite == "ff") {
        rows = check_ff(current_algebra(cfg));
    } else if (suite == "square") {
        LieData g = current_algebra(cfg);
        rows = check_square(g.family() == LieFamily::glA ? cfg.rank : g.matrix_size(), g.family());
    } else if (suite == "diagrams") {
        rows = verify_diagrams(cfg.seed, 10);
    } else {
        return usage_error("unknown suite: " + suite);
    }
    return emit_reports(cfg, suite, rows);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator towers, central vectors and their free-field images"};
    app.require_subcommand(1);

    RunConfig cfg;
    long gen_i = 0, gen_j = 0, width = 1;
    std::string suite;

    CLI::App* bracket = app.add_subcommand("bracket", "print one bracket entry {u_i l u_j}");
    bracket->add_option("--i", gen_i, "first generator offset")->required();
    bracket->add_option("--j", gen_j, "second generator offset")->required();
    add_common_flags(bracket, cfg);

    CLI::App* ssvec = app.add_subcommand("ssvec", "print a central vector of the given width");
    ssvec->add_option("--m", width, "vector width")->required();
    add_common_flags(ssvec, cfg);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("--suite", suite, "skew, jacobi, selfadj, invert, central, ff, square, "
                                       "diagrams or qcoeff")
        ->required()
        ->check(CLI::IsMember(
            {"skew", "jacobi", "selfadj", "invert", "central", "ff", "square", "diagrams",
             "qcoeff"}));
    add_common_flags(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bracket->parsed()) return run_bracket(cfg, gen_i, gen_j);
        if (ssvec->parsed()) return run_ssvec(cfg, width);
        return run_verify(cfg, suite);
    } catch (const HorizonExhausted& e) {
        std::cerr << "horizon exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}

// Acceptance runner: executes the thirteen release criteria and prints one
// PASS/FAIL line each. Exits nonzero when any executed criterion fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "agd/verify.hpp"

using namespace agd;

namespace {

int failures = 0;

void criterion(int number, const std::string& what,
               const std::function<std::vector<CheckReport>()>& run) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> rows;
    bool threw = false;
    std::string error;
    try {
        rows = run();
    } catch (const std::exception& e) {
        threw = true;
        error = e.what();
    }
    bool pass = !threw && !rows.empty();
    long failed = 0;
    for (const auto& r : rows)
        if (!r.pass) {
            pass = false;
            ++failed;
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << what << " ("
              << rows.size() << " checks, " << secs << "s)";
    if (threw) std::cout << " [exception: " << error << "]";
    if (failed) std::cout << " [" << failed << " failed]";
    std::cout << "\n";
    if (!pass) ++failures;
    for (const auto& r : rows)
        if (!r.pass)
            std::cout << "       " << r.check << " [" << r.inputs << "] residual: " << r.residual
                      << "\n";
}

std::vector<CheckReport> concat(std::initializer_list<std::vector<CheckReport>> lists) {
    std::vector<CheckReport> all;
    for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
    return all;
}

} // namespace

int main() {
    criterion(1, "partition-weight coefficients match the binomial-ratio closed form",
              [] { return verify_qcoeff(6, 10); });
    criterion(2, "symbol engine: associativity, adjoint, composition rule, inversion",
              [] { return verify_psido_engine(101, 100, 50, 8); });
    criterion(3, "skew-symmetry of the symbolic bracket, offsets <= 3",
              [] { return verify_skew(3, 6); });
    criterion(4, "Jacobi identity at t = 2, 3 (gl tower) and t = 2 (even tower)", [] {
        return concat({verify_jacobi(WFamily::GlT, 2, 6), verify_jacobi(WFamily::GlT, 3, 6),
                       verify_jacobi(WFamily::PoT, 2, 6)});
    });
    criterion(5, "self-adjoint tower: fixed operator, first elimination, even residuals",
              [] { return verify_selfadj(8); });
    criterion(6, "evaluation then truncation reproduces the finite-rank bracket, n = 2..4",
              [] { return verify_eval_square(2, 4); });
    criterion(7, "parameter negation is a bracket anti-isomorphism at 5/2 and 3", [] {
        return concat({verify_pi(WFamily::GlT, Rat(5, 2), 2), verify_pi(WFamily::PoT, Rat(3), 2)});
    });
    criterion(8, "centrality of the partial-trace vectors at the critical level", [] {
        return concat({verify_central(LieData::gl(2), 2, 2, true),
                       verify_central(LieData::gl(3), 2, 2, false),
                       verify_central(LieData::sp(2), 2, 2), verify_central(LieData::so(3), 2, 2)});
    });
    criterion(9, "interpolated vectors evaluate to the finite-rank vectors, widths <= 2",
              [] { return verify_interp_eval(2, 2, 3); });
    criterion(10, "free-field generator correspondence (gl ranks 2, 3; so_3; sp_2)", [] {
        return concat({check_ff(LieData::gl(2)), check_ff(LieData::gl(3)),
                       check_ff(LieData::so(3)), check_ff(LieData::sp(2))});
    });
    criterion(11, "commuting squares with the operator towers, including the size shift", [] {
        return concat({check_square(2, LieFamily::glA), check_square(3, LieFamily::glA),
                       check_square(3, LieFamily::soB), check_square(2, LieFamily::spC)});
    });
    criterion(12, "diagram algebra: idempotent, realization functoriality, rank threshold",
              [] { return verify_diagrams(2026, 50); });
    std::cout << "SKIP criterion 13: deformed bracket transport (feature-flagged; "
                 "not enabled in this build)\n";

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (12 executed, "
              << failures << " failed, 1 skipped)\n";
    return failures == 0 ? 0 : 1;
}

// Acceptance suite: every exit criterion runs at its stated scope, with
// exact equality everywhere (no numerical tolerances anywhere in the engine).
// Prints one pass/fail line per criterion; exits nonzero on any failure.

#include "braids/checks.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> check_ids;
    int n_max;
};

}  // namespace

int main() {
    using braids::CheckParams;
    using braids::CheckResult;
    using braids::CheckStatus;

    const std::vector<Criterion> criteria = {
        {"1 presentation soundness: relators trivial under the action oracle, n <= 5",
         {"presentation.pn.relators", "presentation.bn.relators"},
         5},
        {"2 homomorphism verification: every f_I preserves all relators, n <= 6",
         {"hom.fI.verify"},
         6},
        {"3 factorizations: f_I through alpha_I, and f_{1,2,3,n} through beta_n, n = 4, 5",
         {"compose.alpha.three", "compose.alpha.four", "compose.betan.f123n"},
         5},
        {"4 composition tables: transvections, xi, beta_k, beta_n, n = 4, 5",
         {"compose.transvections", "compose.xi", "compose.betak", "compose.betan.table"},
         5},
        {"5 witness braid: killed by every f_I (n <= 6), abelianizes to zero, "
         "nontrivial, Brunnian in P_4",
         {"witness.in-kernel", "witness.abelianization", "witness.nontrivial",
          "witness.brunnian"},
         6},
        {"6 center: Z_n central and killed by every f_I; psi inverts it, phi fixes it, n <= 5",
         {"center.central", "hom.fI.center-trivial", "center.psi-inverts", "center.phi-fixes"},
         5},
        {"7 automorphism generators: relator preservation and transvection "
         "classification, n = 4, 5",
         {"aut.verify-endos", "aut.transvection-classify"},
         5},
        {"8 resonance: dim A^2 by independent count, V_I isotropic, membership "
         "tests, pullbacks equal V_I, extension probe, n <= 5",
         {"os.dims", "os.vI.isotropic", "os.r1.members", "os.r1.nonmember", "os.pullback",
          "os.probe"},
         5},
        {"9 strand-map composite: f_{1,2,3} after the 4-to-3 map equals f_{1,2,3,4}",
         {"hom.b4b3.composite"},
         5},
        {"10 combing: 200 seeded random braids round-trip through comb, n <= 5",
         {"comb.roundtrip"},
         5},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        CheckParams params;
        params.n_max = criterion.n_max;
        bool ok = true;
        std::string detail;
        for (const auto& id : criterion.check_ids) {
            const std::vector<CheckResult> results = braids::run_checks(id, params);
            for (const auto& r : results) {
                if (r.status != CheckStatus::Pass) {
                    ok = false;
                    detail += " [" + r.id + ": " + r.detail + "]";
                }
            }
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.name << detail
                  << std::endl;
        if (!ok) ++failures;
    }
    if (failures != 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}

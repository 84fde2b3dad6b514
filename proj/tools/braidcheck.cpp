#include "braids/braid.hpp"
#include "braids/checks.hpp"
#include "braids/expr.hpp"
#include "braids/homomorphism.hpp"
#include "braids/os_algebra.hpp"
#include "braids/render.hpp"
#include "braids/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using braids::Alphabet;
using braids::BraidWord;
using braids::PureBraidWord;
using braids::RatVector;
using braids::ReducedWord;

Alphabet parse_alphabet_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw braids::Error("alphabet must be free:K, sigma:N, or pure:N");
    const std::string kind = spec.substr(0, colon);
    const int param = std::stoi(spec.substr(colon + 1));
    if (kind == "free") return Alphabet::free_group(param);
    if (kind == "sigma") return Alphabet::sigma_braid(param);
    if (kind == "pure") return Alphabet::pure_braid(param);
    throw braids::Error("unknown alphabet kind '" + kind + "'");
}

std::string linear_combo_str(const braids::OSAlgebra2& os, const RatVector& v) {
    std::string out;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        const auto [i, j] = os.letter_alphabet().index_pair(static_cast<int>(c));
        const bool neg = v[c] < 0;
        const braids::Rat mag = neg ? braids::Rat(-v[c]) : v[c];
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + " ";
        out += "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    return out.empty() ? "0" : out;
}

int run_verify(const std::string& filter, int n_max, const std::string& format,
               std::uint64_t seed, bool list_only, bool timings) {
    if (list_only) {
        for (const auto& def : braids::check_registry())
            std::cout << def.id << "\t" << def.citation << "\n";
        return 0;
    }
    braids::CheckParams params;
    params.n_max = n_max;
    params.seed = seed;
    const std::vector<braids::CheckResult> results = braids::run_checks(filter, params);

    int failed = 0, passed = 0, skipped = 0;
    for (const auto& r : results) {
        if (r.status == braids::CheckStatus::Fail) ++failed;
        else if (r.status == braids::CheckStatus::Pass) ++passed;
        else ++skipped;
    }

    if (format == "json") {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["seed"] = seed;
        doc["n_max"] = n_max;
        doc["checks"] = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json item;
            item["id"] = r.id;
            item["citation"] = r.citation;
            item["status"] = braids::status_name(r.status);
            item["millis"] = timings ? r.millis : 0.0;
            item["detail"] = r.detail;
            doc["checks"].push_back(item);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "seed: " << seed << "\nn-max: " << n_max << "\n";
        for (const auto& r : results) {
            std::cout << braids::status_name(r.status) << "  " << r.id;
            if (timings) std::cout << "  (" << r.millis << " ms)";
            if (!r.detail.empty()) std::cout << "  -- " << r.detail;
            std::cout << "\n";
        }
        std::cout << "summary: " << passed << " passed, " << failed << " failed, " << skipped
                  << " skipped\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computational engine for pure braid groups: word arithmetic, the Artin "
                 "action as equality oracle, homomorphism verification, and the "
                 "Orlik-Solomon algebra in low degrees"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the registered checks");
    std::string filter = "*";
    int n_max = 5;
    std::string format = "text";
    std::uint64_t seed = braids::CheckParams{}.seed;
    bool list_only = false, timings = false;
    verify->add_option("--filter", filter, "glob over check ids");
    verify->add_option("--n-max", n_max, "largest strand count for scalable checks")
        ->check(CLI::Range(2, 6));
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", seed, "seed for randomized property checks");
    verify->add_flag("--list", list_only, "print the id -> citation table and exit");
    verify->add_flag("--timings", timings, "include wall-clock timings (non-deterministic)");

    // eval
    auto* eval = app.add_subcommand("eval", "parse and reduce a word");
    std::string alphabet_spec;
    std::string eval_expr;
    eval->add_option("--alphabet", alphabet_spec, "free:K | sigma:N | pure:N")->required();
    eval->add_option("expr", eval_expr, "word expression (one shell argument)")->required();

    // apply
    auto* apply = app.add_subcommand("apply", "apply a homomorphism to a word");
    std::string hom_name = "fI";
    std::vector<int> hom_I;
    int hom_n = 4;
    std::string apply_expr;
    apply->add_option("--hom", hom_name)->check(CLI::IsMember({"fI", "gstar"}));
    apply->add_option("--I", hom_I, "index subset for fI")->delimiter(',');
    apply->add_option("--n", hom_n, "strand count of the domain")->required();
    apply->add_option("expr", apply_expr, "pure braid word")->required();

    // braid render
    auto* braid_cmd = app.add_subcommand("braid", "braid diagram utilities");
    braid_cmd->require_subcommand(1);
    auto* render = braid_cmd->add_subcommand("render", "ASCII diagram of a braid word");
    int render_n = 2;
    std::string render_expr;
    render->add_option("--n", render_n, "strand count")->required();
    render->add_option("expr", render_expr, "sigma word, or A-word to expand")->required();

    // resonance
    auto* resonance = app.add_subcommand("resonance", "degree-one resonance queries");
    resonance->require_subcommand(1);
    auto* member = resonance->add_subcommand("member", "first resonance membership");
    int res_n = 4;
    std::string member_expr;
    member->add_option("--n", res_n, "strand count")->required();
    member->add_option("expr", member_expr, "linear combination of a[i,j]")->required();
    auto* isotropic = resonance->add_subcommand("isotropic", "isotropy of a subspace");
    int iso_n = 4;
    std::vector<int> iso_I;
    std::string iso_span;
    isotropic->add_option("--n", iso_n, "strand count")->required();
    isotropic->add_option("--I", iso_I, "test V_I")->delimiter(',');
    isotropic->add_option("--span", iso_span, "semicolon-separated linear combinations");
    auto* pullback = resonance->add_subcommand("pullback", "pullback of f_I on degree one");
    int pb_n = 4;
    std::vector<int> pb_I;
    pullback->add_option("--n", pb_n, "strand count")->required();
    pullback->add_option("--I", pb_I, "index subset")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(filter, n_max, format, seed, list_only, timings);

        if (eval->parsed()) {
            const Alphabet a = parse_alphabet_spec(alphabet_spec);
            std::cout << braids::print_word(braids::parse_word(eval_expr, a)) << "\n";
            return 0;
        }

        if (apply->parsed()) {
            const Alphabet domain = Alphabet::pure_braid(hom_n);
            const ReducedWord w = braids::parse_word(apply_expr, domain);
            if (hom_name == "gstar") {
                if (hom_n != 4) throw braids::Error("gstar is defined on 4 strands");
                std::cout << braids::print_word(braids::b4_to_b3_pure().apply(w)) << "\n";
            } else {
                if (hom_I.empty()) throw braids::Error("--I is required for fI");
                std::cout << braids::print_word(braids::f_I(hom_n, hom_I).apply(w)) << "\n";
            }
            return 0;
        }

        if (render->parsed()) {
            const std::string text = render_expr;
            BraidWord b(render_n);
            if (text.find("A[") != std::string::npos || text.find("a[") != std::string::npos) {
                const ReducedWord w = braids::parse_word(text, Alphabet::pure_braid(render_n));
                b = braids::expand_to_sigma(PureBraidWord(render_n, w));
            } else {
                b = BraidWord(render_n, braids::parse_word(text, Alphabet::sigma_braid(render_n)));
            }
            std::cout << braids::render_braid(b);
            return 0;
        }

        if (member->parsed()) {
            const braids::OSAlgebra2 os(res_n);
            const RatVector v = braids::parse_linear_combination(member_expr, os);
            const bool zero = std::all_of(v.begin(), v.end(),
                                          [](const braids::Rat& x) { return x == 0; });
            const bool in = braids::in_R1(os, v);
            std::cout << "element: " << linear_combo_str(os, v) << "\n";
            std::cout << "in R^1: " << (in ? "yes" : "no");
            if (zero)
                std::cout << "  (zero vector: membership follows the dim A^1 > 0 convention)";
            std::cout << "\n";
            return 0;
        }

        if (isotropic->parsed()) {
            const braids::OSAlgebra2 os(iso_n);
            braids::Subspace s = braids::Subspace::from_rows(os.dim1(), {});
            if (!iso_I.empty()) {
                s = braids::v_subspace(os, iso_I);
            } else if (!iso_span.empty()) {
                std::vector<RatVector> rows;
                std::size_t start = 0;
                while (start <= iso_span.size()) {
                    const std::size_t semi = iso_span.find(';', start);
                    const std::string part =
                        iso_span.substr(start, semi == std::string::npos ? semi : semi - start);
                    if (!part.empty())
                        rows.push_back(braids::parse_linear_combination(part, os));
                    if (semi == std::string::npos) break;
                    start = semi + 1;
                }
                s = braids::Subspace::from_rows(os.dim1(), rows);
            } else {
                throw braids::Error("pass --I or --span");
            }
            std::cout << "dimension: " << s.dim() << "\n";
            std::cout << "isotropic: " << (braids::is_isotropic(os, s) ? "yes" : "no") << "\n";
            return 0;
        }

        if (pullback->parsed()) {
            const braids::OSAlgebra2 os(pb_n);
            braids::GeneratorMap m = braids::f_I(pb_n, pb_I);
            if (!m.verify()) throw braids::Error("f_I failed verification");
            const braids::Subspace s = braids::pullback_image(os, m);
            for (std::size_t r = 0; r < s.dim(); ++r)
                std::cout << "basis: " << linear_combo_str(os, s.basis_row(r)) << "\n";
            std::cout << "equals V_I: "
                      << (s == braids::v_subspace(os, pb_I) ? "yes" : "no") << "\n";
            return 0;
        }
    } catch (const braids::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const braids::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

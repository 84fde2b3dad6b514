#include "braids/checks.hpp"

#include "braids/braid.hpp"
#include "braids/expr.hpp"
#include "braids/homomorphism.hpp"
#include "braids/os_algebra.hpp"
#include "braids/pn_automorphisms.hpp"
#include "braids/words.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>

namespace braids {

namespace {

const Alphabet kF2 = Alphabet::free_group(2);

ReducedWord f2(const std::string& text) { return parse_word(text, kF2); }

F2Auto lambda_xi() {  // companion of xi on F_2
    return F2Auto::checked(FreeEndo(2, {f2("x^-1"), f2("x y^-1 x^-1")}),
                           FreeEndo(2, {f2("x^-1"), f2("x y^-1 x^-1")}));
}

F2Auto lambda_slot(int j) {  // companions of beta_k; slot 3 repeats slot 1
    if (j == 2)
        return F2Auto::checked(FreeEndo(2, {f2("x y x^-1"), f2("x")}),
                               FreeEndo(2, {f2("y"), f2("y^-1 x y")}));
    return F2Auto::checked(FreeEndo(2, {f2("x"), f2("x^-1 y^-1")}),
                           FreeEndo(2, {f2("x"), f2("y^-1 x^-1")}));
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<int>> subsets34(int n) {
    auto out = subsets(n, 3);
    auto four = subsets(n, 4);
    out.insert(out.end(), four.begin(), four.end());
    return out;
}

std::string set_str(const std::vector<int>& I) {
    std::string s = "{";
    for (std::size_t t = 0; t < I.size(); ++t) s += (t ? "," : "") + std::to_string(I[t]);
    return s + "}";
}

CheckOutcome pass() { return {CheckStatus::Pass, ""}; }

CheckOutcome fail(const std::string& detail) { return {CheckStatus::Fail, detail}; }

CheckOutcome skip(const std::string& detail) { return {CheckStatus::Skip, detail}; }

// Generator-wise equality of two maps P_n -> F_2, by literal reduced words.
bool maps_equal_f2(const GeneratorMap& a, const GeneratorMap& b, std::string* diff) {
    for (std::size_t t = 0; t < a.images().size(); ++t) {
        if (a.images()[t] != b.images()[t]) {
            if (diff) {
                auto [i, j] = a.domain().alphabet.index_pair(static_cast<int>(t));
                *diff = "images differ at A[" + std::to_string(i) + "," + std::to_string(j) +
                        "]: " + a.images()[t].str() + " vs " + b.images()[t].str();
            }
            return false;
        }
    }
    return true;
}

GeneratorMap compose_with_endo(const GeneratorMap& m, const PnEndo& e) {
    std::vector<ReducedWord> images;
    images.reserve(m.images().size());
    for (int letter = 0; letter < m.domain().alphabet.size(); ++letter)
        images.push_back(m.apply(e.image(letter)));
    return GeneratorMap(m.domain(), m.target(), images);
}

ReducedWord brunnian_witness(int n) {
    return parse_word("[[A[1,2],A[2,3]],[A[2,3],A[3,4]]]", Alphabet::pure_braid(n));
}

std::mt19937_64 rng_for(const CheckParams& params, std::uint64_t salt) {
    std::seed_seq seq{params.seed, salt};
    return std::mt19937_64(seq);
}

// ---- individual checks ----------------------------------------------------

CheckOutcome check_pn_relators(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 5); ++n)
        for (const auto& r : pn_presentation(n).relators)
            if (!is_trivial(PureBraidWord(n, r)))
                return fail("relator not trivial at n=" + std::to_string(n) + ": " + r.str());
    return pass();
}

CheckOutcome check_bn_relators(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 6); ++n)
        for (const auto& r : bn_presentation(n).relators)
            if (!is_identity(BraidWord(n, r)))
                return fail("relator not trivial at n=" + std::to_string(n) + ": " + r.str());
    return pass();
}

CheckOutcome check_pure_generators(const CheckParams& p) {
    for (int n = 2; n <= std::min(p.n_max + 1, 6); ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const BraidWord a = pure_generator_sigma(i, j, n);
                if (!is_pure(a)) return fail("A-generator word is not pure");
                if (artin_action(a) != artin_action(pure_generator_sigma_alt(i, j, n)))
                    return fail("the two sigma-forms of A[" + std::to_string(i) + "," +
                                std::to_string(j) + "] differ at n=" + std::to_string(n));
            }
        }
    }
    return pass();
}

CheckOutcome check_fI_verify(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 6); ++n)
        for (const auto& I : subsets34(n)) {
            GeneratorMap m = f_I(n, I);
            if (!m.verify())
                return fail("f_" + set_str(I) + " fails a relator at n=" + std::to_string(n));
        }
    return pass();
}

CheckOutcome check_fI_surjective(const CheckParams& p) {
    const ReducedWord x = f2("x"), y = f2("y");
    for (int n = 3; n <= std::min(p.n_max, 6); ++n)
        for (const auto& I : subsets34(n)) {
            const GeneratorMap m = f_I(n, I);
            const auto& imgs = m.images();
            const bool has_x = std::find(imgs.begin(), imgs.end(), x) != imgs.end();
            const bool has_y = std::find(imgs.begin(), imgs.end(), y) != imgs.end();
            if (!has_x || !has_y)
                return fail("x,y missing from images of f_" + set_str(I));
        }
    return pass();
}

CheckOutcome check_fI_center(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 6); ++n) {
        const ReducedWord z = center_element(n).word();
        for (const auto& I : subsets34(n))
            if (!f_I(n, I).apply(z).is_identity())
                return fail("f_" + set_str(I) + " does not kill the center at n=" +
                            std::to_string(n));
    }
    return pass();
}

CheckOutcome check_center_central(const CheckParams& p) {
    for (int n = 2; n <= std::min(p.n_max, 5); ++n) {
        const PureBraidWord z = center_element(n);
        const Alphabet a = Alphabet::pure_braid(n);
        for (int letter = 0; letter < a.size(); ++letter) {
            const PureBraidWord g(n, ReducedWord::generator(a, letter));
            if (!is_trivial(PureBraidWord(n, commutator(z.word(), g.word()))))
                return fail("center fails to commute with " + a.letter_name(letter) +
                            " at n=" + std::to_string(n));
        }
    }
    return pass();
}

CheckOutcome check_psi_center(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 5); ++n) {
        const ReducedWord z = center_element(n).word();
        const ReducedWord image = psi(n).apply(z);
        if (!is_trivial(PureBraidWord(n, image * z)))
            return fail("psi does not invert the center at n=" + std::to_string(n));
    }
    return pass();
}

CheckOutcome check_phi_center(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 5); ++n) {
        const ReducedWord z = center_element(n).word();
        for (int q = 2; q <= n; ++q)
            for (int pp = 1; pp < q; ++pp) {
                if (pp == 1 && q == 2) continue;
                const ReducedWord image = phi(pp, q, n).apply(z);
                if (!is_trivial(PureBraidWord(n, image * z.inverse())))
                    return fail("phi_{" + std::to_string(pp) + "," + std::to_string(q) +
                                "} moves the center at n=" + std::to_string(n));
            }
    }
    return pass();
}

CheckOutcome check_alpha_action(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const Alphabet a = Alphabet::pure_braid(n);
        for (const auto& I : subsets34(n)) {
            const PnEndo al = alpha(I, n);
            for (std::size_t r = 0; r + 1 < I.size(); ++r)
                for (std::size_t s = r + 1; s < I.size(); ++s) {
                    const ReducedWord lhs = al.image(a.pair_index(I[r], I[s]));
                    const ReducedWord rhs = ReducedWord::generator(
                        a, a.pair_index(static_cast<int>(r) + 1, static_cast<int>(s) + 1));
                    if (!is_trivial(PureBraidWord(n, lhs * rhs.inverse())))
                        return fail("alpha_" + set_str(I) + " misplaces A[" +
                                    std::to_string(I[r]) + "," + std::to_string(I[s]) + "]");
                }
        }
    }
    return pass();
}

CheckOutcome check_alpha_compose(const CheckParams& p, std::size_t card) {
    if (p.n_max < 4) return skip("needs n >= 4");
    std::vector<int> base(card);
    for (std::size_t t = 0; t < card; ++t) base[t] = static_cast<int>(t) + 1;
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const GeneratorMap f_base = f_I(n, base);
        for (const auto& I : subsets(n, static_cast<int>(card))) {
            const GeneratorMap lhs = f_I(n, I);
            const GeneratorMap rhs = compose_with_endo(f_base, alpha(I, n));
            std::string diff;
            if (!maps_equal_f2(lhs, rhs, &diff))
                return fail("f_" + set_str(I) + " != f_base o alpha at n=" + std::to_string(n) +
                            "; " + diff);
        }
    }
    return pass();
}

CheckOutcome check_betan_f123n(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const GeneratorMap lhs = f_I(n, {1, 2, 3, n});
        const GeneratorMap rhs = compose_with_endo(f_I(n, {1, 2, 3}), beta(n, n));
        std::string diff;
        if (!maps_equal_f2(lhs, rhs, &diff))
            return fail("f_{1,2,3,n} != f_{1,2,3} o beta_n at n=" + std::to_string(n) + "; " +
                        diff);
    }
    return pass();
}

CheckOutcome check_compose_transvections(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        std::vector<PnEndo> tvs;
        tvs.push_back(psi(n));
        for (int q = 2; q <= n; ++q)
            for (int pp = 1; pp < q; ++pp)
                if (!(pp == 1 && q == 2)) tvs.push_back(phi(pp, q, n));
        for (const auto& I : subsets34(n)) {
            const GeneratorMap m = f_I(n, I);
            for (const auto& tv : tvs) {
                std::string diff;
                if (!maps_equal_f2(compose_with_endo(m, tv), m, &diff))
                    return fail("transvection changes f_" + set_str(I) + " at n=" +
                                std::to_string(n) + "; " + diff);
            }
        }
    }
    return pass();
}

CheckOutcome check_compose_xi(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    const F2Auto lam = lambda_xi();
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const PnEndo x = xi(n);
        for (const auto& I : subsets34(n)) {
            const GeneratorMap m = f_I(n, I);
            std::string diff;
            if (!maps_equal_f2(compose_with_endo(m, x), compose_with_f2_auto(m, lam), &diff))
                return fail("f_" + set_str(I) + " o xi mismatch at n=" + std::to_string(n) +
                            "; " + diff);
        }
    }
    return pass();
}

CheckOutcome check_compose_betak(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const PnEndo bk = beta(k, n);
            for (const auto& I : subsets34(n)) {
                // tau_k swaps k and k+1
                std::vector<int> tau_I = I;
                for (auto& v : tau_I) {
                    if (v == k) v = k + 1;
                    else if (v == k + 1) v = k;
                }
                std::sort(tau_I.begin(), tau_I.end());
                GeneratorMap rhs = f_I(n, tau_I);
                int slot = 0;
                for (std::size_t j = 0; j + 1 < I.size(); ++j)
                    if (I[j] == k && I[j + 1] == k + 1) slot = static_cast<int>(j) + 1;
                if (slot != 0) rhs = compose_with_f2_auto(rhs, lambda_slot(slot));
                const GeneratorMap lhs = compose_with_endo(f_I(n, I), bk);
                std::string diff;
                if (!maps_equal_f2(lhs, rhs, &diff))
                    return fail("f_" + set_str(I) + " o beta_" + std::to_string(k) +
                                " mismatch at n=" + std::to_string(n) + "; " + diff);
            }
        }
    }
    return pass();
}

CheckOutcome check_compose_betan(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const PnEndo bn = beta(n, n);
        for (const auto& I : subsets34(n)) {
            const bool has_n = I.back() == n;
            GeneratorMap rhs = [&]() {
                if (I.size() == 3 && !has_n) {
                    std::vector<int> J = I;
                    J.push_back(n);
                    return f_I(n, J);
                }
                if (I.size() == 3 && has_n) return compose_with_f2_auto(f_I(n, I), lambda_slot(1));
                if (I.size() == 4 && !has_n) return f_I(n, I);
                std::vector<int> J(I.begin(), I.end() - 1);
                return f_I(n, J);
            }();
            const GeneratorMap lhs = compose_with_endo(f_I(n, I), bn);
            std::string diff;
            if (!maps_equal_f2(lhs, rhs, &diff))
                return fail("f_" + set_str(I) + " o beta_n mismatch at n=" + std::to_string(n) +
                            "; " + diff);
        }
    }
    return pass();
}

CheckOutcome check_witness_kernel(const CheckParams& p) {
    for (int n = 4; n <= std::max(4, std::min(p.n_max, 6)); ++n) {
        const ReducedWord w = brunnian_witness(n);
        for (const auto& I : subsets34(n))
            if (!f_I(n, I).apply(w).is_identity())
                return fail("witness survives f_" + set_str(I) + " at n=" + std::to_string(n));
    }
    return pass();
}

CheckOutcome check_witness_abelianization(const CheckParams&) {
    const ExponentVector v = brunnian_witness(4).exponent_vector();
    for (const auto& c : v)
        if (c != 0) return fail("witness has nonzero exponent sum");
    return pass();
}

CheckOutcome check_witness_nontrivial(const CheckParams&) {
    const Alphabet a = Alphabet::pure_braid(4);
    if (is_trivial(PureBraidWord(4, brunnian_witness(4))))
        return fail("witness is the trivial braid");
    // equivalently: the two commutator products are distinguished by the action
    const ReducedWord u = parse_word("[A[1,2],A[2,3]] [A[2,3],A[3,4]]", a);
    const ReducedWord v = parse_word("[A[2,3],A[3,4]] [A[1,2],A[2,3]]", a);
    if (artin_action(expand_to_sigma(PureBraidWord(4, u))) ==
        artin_action(expand_to_sigma(PureBraidWord(4, v))))
        return fail("commutator products not distinguished");
    return pass();
}

CheckOutcome check_witness_brunnian(const CheckParams&) {
    if (!brunnian_check(PureBraidWord(4, brunnian_witness(4))))
        return fail("witness is not Brunnian in P_4");
    return pass();
}

CheckOutcome check_verify_endos(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        std::vector<std::pair<std::string, PnEndo>> endos;
        endos.emplace_back("xi", xi(n));
        endos.emplace_back("psi", psi(n));
        for (int k = 1; k <= n; ++k)
            endos.emplace_back("beta_" + std::to_string(k), beta(k, n));
        for (int q = 2; q <= n; ++q)
            for (int pp = 1; pp < q; ++pp)
                if (!(pp == 1 && q == 2))
                    endos.emplace_back("phi_{" + std::to_string(pp) + "," + std::to_string(q) + "}",
                                       phi(pp, q, n));
        for (auto& [name, e] : endos)
            if (!verify_endo(e))
                return fail(name + " breaks a relator at n=" + std::to_string(n));
    }
    return pass();
}

CheckOutcome check_transvection_classify(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const Alphabet a = Alphabet::pure_braid(n);
        const TransvectionReport r_psi = is_transvection(psi(n));
        if (!r_psi.is_transvection || r_psi.exponent_sum != -2 ||
            r_psi.exponents[static_cast<std::size_t>(a.pair_index(1, 2))] != -2)
            return fail("psi not classified as the sum -2 transvection at n=" + std::to_string(n));
        for (int q = 2; q <= n; ++q)
            for (int pp = 1; pp < q; ++pp) {
                if (pp == 1 && q == 2) continue;
                const TransvectionReport r = is_transvection(phi(pp, q, n));
                if (!r.is_transvection || r.exponent_sum != 0 ||
                    r.exponents[static_cast<std::size_t>(a.pair_index(1, 2))] != 1 ||
                    r.exponents[static_cast<std::size_t>(a.pair_index(pp, q))] != -1)
                    return fail("phi_{" + std::to_string(pp) + "," + std::to_string(q) +
                                "} not classified at n=" + std::to_string(n));
            }
        for (int k = 1; k <= n - 1; ++k)
            if (is_transvection(beta(k, n)).is_transvection)
                return fail("beta_" + std::to_string(k) + " misclassified as a transvection");
    }
    return pass();
}

CheckOutcome check_os_dims(const CheckParams& p) {
    for (int n = 2; n <= std::min(p.n_max, 6); ++n) {
        const OSAlgebra2 os(n);
        // independent count: e_2(1, 2, ..., n-1)
        long expected = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) expected += i * j;
        if (os.dim1() != static_cast<std::size_t>(n * (n - 1) / 2))
            return fail("dim A^1 wrong at n=" + std::to_string(n));
        if (os.dim2() != static_cast<std::size_t>(expected))
            return fail("dim A^2 = " + std::to_string(os.dim2()) + " but expected " +
                        std::to_string(expected) + " at n=" + std::to_string(n));
    }
    return pass();
}

CheckOutcome check_os_triples(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 6); ++n) {
        const OSAlgebra2 os(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    RatVector acc = os.mu(os.basis_vector(i, j), os.basis_vector(i, k));
                    const RatVector t2 = os.mu(os.basis_vector(i, j), os.basis_vector(j, k));
                    const RatVector t3 = os.mu(os.basis_vector(i, k), os.basis_vector(j, k));
                    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += -t2[c] + t3[c];
                    if (!std::all_of(acc.begin(), acc.end(), [](const Rat& x) { return x == 0; }))
                        return fail("triple relation nonzero at n=" + std::to_string(n));
                }
    }
    return pass();
}

CheckOutcome check_os_mu_alternating(const CheckParams& p) {
    auto rng = rng_for(p, 101);
    for (int n = 3; n <= std::min(p.n_max, 6); ++n) {
        const OSAlgebra2 os(n);
        std::uniform_int_distribution<int> coef(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            RatVector a(os.dim1()), b(os.dim1()), c(os.dim1());
            for (std::size_t t = 0; t < os.dim1(); ++t) {
                a[t] = coef(rng);
                b[t] = coef(rng);
                c[t] = coef(rng);
            }
            const auto zero = [](const RatVector& v) {
                return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
            };
            if (!zero(os.mu(a, a))) return fail("mu(a,a) != 0");
            RatVector anti = os.mu(a, b);
            const RatVector ba = os.mu(b, a);
            for (std::size_t t = 0; t < anti.size(); ++t) anti[t] += ba[t];
            if (!zero(anti)) return fail("mu not antisymmetric");
            RatVector ac(os.dim1());
            for (std::size_t t = 0; t < os.dim1(); ++t) ac[t] = a[t] + c[t];
            RatVector lin = os.mu(ac, b);
            const RatVector m1 = os.mu(a, b), m2 = os.mu(c, b);
            for (std::size_t t = 0; t < lin.size(); ++t) lin[t] -= m1[t] + m2[t];
            if (!zero(lin)) return fail("mu not bilinear");
        }
    }
    return pass();
}

CheckOutcome check_os_isotropic(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 6); ++n) {
        const OSAlgebra2 os(n);
        for (const auto& I : subsets34(n)) {
            const Subspace v = v_subspace(os, I);
            if (v.dim() != 2) return fail("V_" + set_str(I) + " is not 2-dimensional");
            if (!is_isotropic(os, v))
                return fail("V_" + set_str(I) + " not isotropic at n=" + std::to_string(n));
        }
    }
    return pass();
}

CheckOutcome check_os_r1_members(const CheckParams& p) {
    auto rng = rng_for(p, 202);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int n = 3; n <= std::min(p.n_max, 5); ++n) {
        const OSAlgebra2 os(n);
        for (const auto& I : subsets34(n)) {
            const Subspace v = v_subspace(os, I);
            int c1 = 0, c2 = 0;
            while (c1 == 0 && c2 == 0) {
                c1 = coef(rng);
                c2 = coef(rng);
            }
            RatVector a(os.dim1());
            const RatVector b1 = v.basis_row(0), b2 = v.basis_row(1);
            for (std::size_t t = 0; t < os.dim1(); ++t) a[t] = Rat(c1) * b1[t] + Rat(c2) * b2[t];
            if (!in_R1(os, a))
                return fail("element of V_" + set_str(I) + " not in R^1 at n=" + std::to_string(n));
        }
    }
    return pass();
}

CheckOutcome check_os_r1_nonmember(const CheckParams&) {
    const OSAlgebra2 os(4);
    if (in_R1(os, os.basis_vector(1, 2)))
        return fail("a[1,2] wrongly inside R^1 for n=4");
    return pass();
}

CheckOutcome check_os_pullback(const CheckParams& p) {
    for (int n = 3; n <= std::min(p.n_max, 5); ++n) {
        const OSAlgebra2 os(n);
        for (const auto& I : subsets34(n)) {
            GeneratorMap m = f_I(n, I);
            if (!m.verify()) return fail("f_" + set_str(I) + " did not verify");
            if (!(pullback_image(os, m) == v_subspace(os, I)))
                return fail("pullback of f_" + set_str(I) + " differs from V_I at n=" +
                            std::to_string(n));
        }
    }
    return pass();
}

CheckOutcome check_os_pullback_natural(const CheckParams& p) {
    const std::vector<F2Auto> lams = {lambda_xi(), lambda_slot(1), lambda_slot(2)};
    for (int n = 3; n <= std::min(p.n_max, 5); ++n) {
        const OSAlgebra2 os(n);
        for (const auto& I : subsets34(n)) {
            GeneratorMap m = f_I(n, I);
            m.verify();
            const Subspace base = pullback_image(os, m);
            for (const auto& lam : lams) {
                GeneratorMap twisted = compose_with_f2_auto(m, lam);
                twisted.verify();
                if (!(pullback_image(os, twisted) == base))
                    return fail("pullback not invariant under an F_2 automorphism at n=" +
                                std::to_string(n));
            }
        }
    }
    return pass();
}

CheckOutcome check_os_probe(const CheckParams& p) {
    if (p.n_max < 4) return skip("needs n >= 4");
    for (int n = 4; n <= std::min(p.n_max, 5); ++n) {
        const OSAlgebra2 os(n);
        for (const auto& I : subsets34(n))
            if (!max_isotropic_extension_probe(os, I))
                return fail("a coordinate direction extends V_" + set_str(I) +
                            " isotropically at n=" + std::to_string(n));
    }
    return pass();
}

CheckOutcome check_b4b3_sigma(const CheckParams&) {
    GeneratorMap m = b4_to_b3_sigma();
    if (!m.verify()) return fail("sigma-level map does not preserve the braid relations");
    return pass();
}

CheckOutcome check_b4b3_composite(const CheckParams&) {
    GeneratorMap gstar = b4_to_b3_pure();
    if (!gstar.verify()) return fail("the pure restriction breaks a relator");
    const GeneratorMap f3 = f_I(3, {1, 2, 3});
    const GeneratorMap f4 = f_I(4, {1, 2, 3, 4});
    const Alphabet a4 = Alphabet::pure_braid(4);
    for (int letter = 0; letter < a4.size(); ++letter) {
        const ReducedWord lhs = f3.apply(gstar.image(letter));
        if (lhs != f4.image(letter))
            return fail("mismatch at " + a4.letter_name(letter) + ": " + lhs.str() + " vs " +
                        f4.image(letter).str());
    }
    return pass();
}

CheckOutcome check_comb_roundtrip(const CheckParams& p) {
    auto rng = rng_for(p, 303);
    const int trials = 200;
    std::uniform_int_distribution<int> pick_n(2, std::min(p.n_max, 5));
    std::uniform_int_distribution<int> pick_len(0, 8);
    for (int t = 0; t < trials; ++t) {
        const int n = pick_n(rng);
        const Alphabet a = Alphabet::pure_braid(n);
        std::uniform_int_distribution<int> pick_letter(0, a.size() - 1);
        std::uniform_int_distribution<int> pick_sign(0, 1);
        std::vector<std::pair<int, BigInt>> raw;
        const int len = pick_len(rng);
        for (int s = 0; s < len; ++s)
            raw.emplace_back(pick_letter(rng), pick_sign(rng) ? 1 : -1);
        const PureBraidWord word(n, ReducedWord::reduce(a, raw));
        const PureBraidWord combed = comb(expand_to_sigma(word));
        if (artin_action(expand_to_sigma(combed)) != artin_action(expand_to_sigma(word)))
            return fail("comb round trip failed for " + word.word().str() + " at n=" +
                        std::to_string(n));
    }
    return pass();
}

CheckOutcome check_comb_generators(const CheckParams& p) {
    for (int n = 2; n <= std::min(p.n_max, 5); ++n) {
        const Alphabet a = Alphabet::pure_braid(n);
        for (int letter = 0; letter < a.size(); ++letter) {
            const PureBraidWord g(n, ReducedWord::generator(a, letter));
            const PureBraidWord combed = comb(expand_to_sigma(g));
            if (!pure_equal(combed, g))
                return fail("comb misreads generator " + a.letter_name(letter));
        }
    }
    return pass();
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = {
        {"presentation.pn.relators", "defining relations of the pure braid generators",
         check_pn_relators},
        {"presentation.bn.relators", "braid and far-commutation relations", check_bn_relators},
        {"braid.pure-generator-forms", "the two sigma-expressions of each A-generator agree",
         check_pure_generators},
        {"hom.fI.verify", "each f_I preserves every defining relation", check_fI_verify},
        {"hom.fI.surjective", "x and y occur among the images of each f_I", check_fI_surjective},
        {"hom.fI.center-trivial", "each f_I kills the center", check_fI_center},
        {"center.central", "Z_n commutes with every generator", check_center_central},
        {"center.psi-inverts", "psi sends the center to its inverse", check_psi_center},
        {"center.phi-fixes", "each phi fixes the center", check_phi_center},
        {"compose.alpha.action", "alpha_I relabels the generators indexed by I",
         check_alpha_action},
        {"compose.alpha.three", "f_I factors through alpha_I for |I| = 3",
         [](const CheckParams& p) { return check_alpha_compose(p, 3); }},
        {"compose.alpha.four", "f_I factors through alpha_I for |I| = 4",
         [](const CheckParams& p) { return check_alpha_compose(p, 4); }},
        {"compose.betan.f123n", "f_{1,2,3,n} factors through beta_n", check_betan_f123n},
        {"compose.transvections", "transvections act trivially on every f_I",
         check_compose_transvections},
        {"compose.xi", "xi twists each f_I by a fixed F_2 automorphism", check_compose_xi},
        {"compose.betak", "beta_k permutes the f_I, twisting adjacent pairs",
         check_compose_betak},
        {"compose.betan.table", "the four-case composition table for beta_n",
         check_compose_betan},
        {"witness.in-kernel", "the witness braid lies in the kernel of every f_I",
         check_witness_kernel},
        {"witness.abelianization", "the witness braid has zero exponent sums",
         check_witness_abelianization},
        {"witness.nontrivial", "the witness braid is nontrivial under the action oracle",
         check_witness_nontrivial},
        {"witness.brunnian", "deleting any strand trivializes the witness braid",
         check_witness_brunnian},
        {"aut.verify-endos", "the listed generators of Aut(P_n) preserve the relations",
         check_verify_endos},
        {"aut.transvection-classify", "psi and phi are transvections with sums -2 and 0; beta_k is not",
         check_transvection_classify},
        {"os.dims", "dim A^2 matches the independent rank count", check_os_dims},
        {"os.triple-relations", "every triple relation vanishes in A^2", check_os_triples},
        {"os.mu.alternating", "mu is bilinear and alternating", check_os_mu_alternating},
        {"os.vI.isotropic", "every V_I is a 2-dimensional isotropic subspace",
         check_os_isotropic},
        {"os.r1.members", "random nonzero elements of each V_I lie in R^1",
         check_os_r1_members},
        {"os.r1.nonmember", "a[1,2] lies outside R^1 for n = 4", check_os_r1_nonmember},
        {"os.pullback", "the pullback of each f_I equals V_I", check_os_pullback},
        {"os.pullback.natural", "pullbacks are invariant under F_2 automorphisms",
         check_os_pullback_natural},
        {"os.probe", "no coordinate direction extends any V_I isotropically", check_os_probe},
        {"hom.b4b3.sigma", "the 4-to-3 strand map preserves the braid relations",
         check_b4b3_sigma},
        {"hom.b4b3.composite", "f_{1,2,3} composed with the strand map equals f_{1,2,3,4}",
         check_b4b3_composite},
        {"comb.generators", "combing recovers each A-generator from its sigma-form",
         check_comb_generators},
        {"comb.roundtrip", "combing preserves the action on 200 random braids",
         check_comb_roundtrip},
    };
    return registry;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

std::vector<CheckResult> run_checks(const std::string& filter, const CheckParams& params) {
    const auto& registry = check_registry();
    std::vector<const CheckDef*> selected;
    for (const auto& def : registry)
        if (glob_match(filter, def.id)) selected.push_back(&def);
    if (selected.empty()) throw Error("no check matches filter '" + filter + "'");

    std::vector<std::future<CheckResult>> futures;
    futures.reserve(selected.size());
    for (const CheckDef* def : selected) {
        futures.push_back(std::async(std::launch::async, [def, params]() {
            CheckResult result;
            result.id = def->id;
            result.citation = def->citation;
            const auto start = std::chrono::steady_clock::now();
            try {
                const CheckOutcome outcome = def->run(params);
                result.status = outcome.status;
                result.detail = outcome.detail;
            } catch (const std::exception& e) {
                result.status = CheckStatus::Fail;
                result.detail = std::string("exception: ") + e.what();
            }
            const auto stop = std::chrono::steady_clock::now();
            result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
            return result;
        }));
    }
    std::vector<CheckResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

}  // namespace braids

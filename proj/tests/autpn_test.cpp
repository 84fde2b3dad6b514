#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/expr.hpp"
#include "braids/pn_automorphisms.hpp"

using namespace braids;

namespace {

ReducedWord pw(int n, const std::string& text) {
    return parse_word(text, Alphabet::pure_braid(n));
}

int idx(int n, int i, int j) { return Alphabet::pure_braid(n).pair_index(i, j); }

}  // namespace

TEST_CASE("psi images") {
    const PnEndo e = psi(4);
    const ReducedWord z = center_element(4).word();
    CHECK(e.image(idx(4, 1, 2)) == pw(4, "A[1,2]") * z.pow(-2));
    CHECK(e.image(idx(4, 1, 3)) == pw(4, "A[1,3]"));
    CHECK(e.image(idx(4, 3, 4)) == pw(4, "A[3,4]"));
}

TEST_CASE("phi images") {
    const PnEndo e = phi(2, 4, 4);
    const ReducedWord z = center_element(4).word();
    CHECK(e.image(idx(4, 1, 2)) == pw(4, "A[1,2]") * z);
    CHECK(e.image(idx(4, 2, 4)) == pw(4, "A[2,4]") * z.inverse());
    CHECK(e.image(idx(4, 1, 3)) == pw(4, "A[1,3]"));
    CHECK_THROWS_AS(phi(1, 2, 4), InvalidIndex);
    CHECK_THROWS_AS(phi(2, 2, 4), InvalidIndex);
}

TEST_CASE("beta_k case table") {
    // fixed cases
    CHECK(beta(1, 4).image(idx(4, 1, 2)) == pw(4, "A[1,2]"));
    CHECK(beta(3, 4).image(idx(4, 1, 2)) == pw(4, "A[1,2]"));
    // k = i - 1
    CHECK(beta(1, 4).image(idx(4, 2, 3)) == pw(4, "A[1,3]"));
    // k = i < j - 1
    CHECK(beta(1, 4).image(idx(4, 1, 3)) == pw(4, "A[1,2]^-1 A[2,3] A[1,2]"));
    // k = j - 1 > i
    CHECK(beta(2, 4).image(idx(4, 1, 3)) == pw(4, "A[1,2]"));
    // k = j
    CHECK(beta(3, 4).image(idx(4, 1, 3)) == pw(4, "A[3,4]^-1 A[1,4] A[3,4]"));
    CHECK_THROWS_AS(beta(0, 4), InvalidIndex);
    CHECK_THROWS_AS(beta(5, 4), InvalidIndex);
}

TEST_CASE("beta_k matches conjugation by s_k") {
    for (int n = 3; n <= 4; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const PnEndo e = beta(k, n);
            const Alphabet a = Alphabet::pure_braid(n);
            const Alphabet sa = Alphabet::sigma_braid(n);
            const ReducedWord sk = ReducedWord::generator(sa, k - 1);
            for (int letter = 0; letter < a.size(); ++letter) {
                auto [i, j] = a.index_pair(letter);
                const ReducedWord conj =
                    sk.inverse() * pure_generator_sigma(i, j, n).word() * sk;
                const ReducedWord image =
                    expand_to_sigma(PureBraidWord(n, e.image(letter))).word();
                CHECK(is_identity(BraidWord(n, conj * image.inverse())));
            }
        }
}

TEST_CASE("beta_n inverts the last column") {
    const PnEndo e = beta(4, 4);
    CHECK(e.image(idx(4, 1, 2)) == pw(4, "A[1,2]"));
    CHECK(e.image(idx(4, 1, 4)) == pw(4, "(A[1,4] A[1,2] A[1,3])^-1"));
    CHECK(e.image(idx(4, 2, 4)) == pw(4, "(A[2,4] A[1,2] A[2,3])^-1"));
    CHECK(e.image(idx(4, 3, 4)) == pw(4, "(A[3,4] A[1,3] A[2,3])^-1"));
}

TEST_CASE("xi images") {
    const PnEndo e = xi(3);
    CHECK(e.image(idx(3, 1, 2)) == pw(3, "A[1,2]^-1"));
    CHECK(e.image(idx(3, 2, 3)) == pw(3, "A[2,3]^-1"));
    CHECK(e.image(idx(3, 1, 3)) == pw(3, "A[2,3]^-1 A[1,3]^-1 A[2,3]"));
}

TEST_CASE("endomorphism application and composition") {
    const PnEndo id = PnEndo::identity(4);
    const ReducedWord w = pw(4, "A[1,2] A[3,4]^-1");
    CHECK(id.apply(w) == w);

    // psi inverts the center, phi fixes it, under the oracle
    for (int n = 3; n <= 4; ++n) {
        const ReducedWord z = center_element(n).word();
        CHECK(is_trivial(PureBraidWord(n, psi(n).apply(z) * z)));
        for (int q = 2; q <= n; ++q)
            for (int p = 1; p < q; ++p)
                if (!(p == 1 && q == 2))
                    CHECK(is_trivial(PureBraidWord(n, phi(p, q, n).apply(z) * z.inverse())));
    }

    // composition applies left factor first
    const PnEndo both = beta(1, 3).then(beta(2, 3));
    CHECK(both.image(idx(3, 2, 3)) == beta(2, 3).apply(beta(1, 3).image(idx(3, 2, 3))));
}

TEST_CASE("alpha composites") {
    // prefix sets give the identity
    CHECK(alpha({1, 2, 3}, 4).images() == PnEndo::identity(4).images());
    CHECK(alpha({1, 2, 3, 4}, 4).images() == PnEndo::identity(4).images());

    const PnEndo a124 = alpha({1, 2, 4}, 4);
    CHECK(is_trivial(PureBraidWord(4, a124.image(idx(4, 1, 4)) * pw(4, "A[1,3]").inverse())));

    const PnEndo a234 = alpha({2, 3, 4}, 4);
    CHECK(is_trivial(PureBraidWord(4, a234.image(idx(4, 2, 3)) * pw(4, "A[1,2]").inverse())));

    CHECK_THROWS_AS(alpha({3}, 4), InvalidIndex);
    CHECK_THROWS_AS(alpha({2, 5}, 4), InvalidIndex);
}

TEST_CASE("relator preservation") {
    PnEndo id = PnEndo::identity(3);
    CHECK(verify_endo(id));
    CHECK(id.verified());

    for (int n = 4; n <= 4; ++n) {
        PnEndo endos[] = {xi(n), psi(n), beta(1, n), beta(n - 1, n), beta(n, n), phi(1, 3, n)};
        for (auto& e : endos) CHECK(verify_endo(e));
    }

    // swapping in A[1,3] for A[1,2] is not an endomorphism of P_3
    std::vector<ReducedWord> bad = PnEndo::identity(3).images();
    bad[static_cast<std::size_t>(idx(3, 1, 2))] = pw(3, "A[1,3]");
    PnEndo broken(3, bad);
    CHECK_FALSE(verify_endo(broken));
}

TEST_CASE("transvection recognition") {
    const TransvectionReport r_psi = is_transvection(psi(4));
    CHECK(r_psi.is_transvection);
    CHECK(r_psi.exponents[static_cast<std::size_t>(idx(4, 1, 2))] == -2);
    CHECK(r_psi.exponent_sum == -2);
    CHECK(r_psi.automorphism_sum());

    const TransvectionReport r_phi = is_transvection(phi(3, 4, 4));
    CHECK(r_phi.is_transvection);
    CHECK(r_phi.exponents[static_cast<std::size_t>(idx(4, 1, 2))] == 1);
    CHECK(r_phi.exponents[static_cast<std::size_t>(idx(4, 3, 4))] == -1);
    CHECK(r_phi.exponent_sum == 0);
    CHECK(r_phi.automorphism_sum());

    CHECK_FALSE(is_transvection(beta(1, 4)).is_transvection);
    CHECK(is_transvection(PnEndo::identity(4)).is_transvection);
}

TEST_CASE("transvections compose additively against the center action") {
    // psi then phi: exponents add since phi fixes the center
    const TransvectionReport a = is_transvection(psi(4).then(phi(1, 3, 4)));
    CHECK(a.is_transvection);
    CHECK(a.exponents[static_cast<std::size_t>(idx(4, 1, 2))] == -1);
    CHECK(a.exponents[static_cast<std::size_t>(idx(4, 1, 3))] == -1);
    CHECK(a.exponent_sum == -2);

    // phi then psi: psi inverts the center, flipping phi's contribution
    const TransvectionReport b = is_transvection(phi(1, 3, 4).then(psi(4)));
    CHECK(b.is_transvection);
    CHECK(b.exponents[static_cast<std::size_t>(idx(4, 1, 2))] == -3);
    CHECK(b.exponents[static_cast<std::size_t>(idx(4, 1, 3))] == 1);
    CHECK(b.exponent_sum == -2);
}

TEST_CASE("alpha composites preserve the relations") {
    PnEndo a = alpha({1, 3, 4}, 4);
    CHECK(verify_endo(a));
    PnEndo b = alpha({2, 4}, 4);
    CHECK(verify_endo(b));
}

TEST_CASE("explicit inverses") {
    // psi is an involution: it sends the center to its inverse, so applying it
    // twice restores A[1,2] Z^-2 Z^2.
    PnEndo e = psi(3);
    e.set_inverse(psi(3).images());
    CHECK(e.inverse_images().has_value());

    PnEndo f = psi(3);
    CHECK_THROWS_AS(f.set_inverse(PnEndo::identity(3).images()), NotAutomorphism);

    // phi_{p,q} composed with its reflection phi with swapped exponents
    PnEndo g = phi(1, 3, 3);
    std::vector<ReducedWord> inv = PnEndo::identity(3).images();
    const ReducedWord z = center_element(3).word();
    inv[static_cast<std::size_t>(idx(3, 1, 2))] = pw(3, "A[1,2]") * z.inverse();
    inv[static_cast<std::size_t>(idx(3, 1, 3))] = pw(3, "A[1,3]") * z;
    g.set_inverse(inv);
    CHECK(g.inverse_images().has_value());
}

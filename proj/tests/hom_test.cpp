#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/expr.hpp"
#include "braids/homomorphism.hpp"
#include "test_util.hpp"

#include <random>

using namespace braids;
using namespace braids::testing;

namespace {

const Alphabet f2 = Alphabet::free_group(2);

ReducedWord w2(const std::string& text) { return parse_word(text, f2); }

// The five case patterns, enumerated directly as an independent count.
int admissible_tuples(int n) {
    int count = 0;
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const bool case1 = i < r && r < s && s < j;
                    const bool case2 = r < s && s < i;
                    const bool case3 = r < s && s == i;
                    const bool case4 = r == i && s < j && r < s;
                    const bool case5 = r < i && i < s && s < j;
                    if (case1 || case2 || case3 || case4 || case5) ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("pure braid presentation shape") {
    const Presentation p2 = pn_presentation(2);
    CHECK(p2.alphabet.size() == 1);
    CHECK(p2.relators.empty());

    for (int n = 3; n <= 6; ++n) {
        const Presentation p = pn_presentation(n);
        CHECK(p.alphabet.size() == n * (n - 1) / 2);
        CHECK(static_cast<int>(p.relators.size()) == admissible_tuples(n));
        for (const auto& r : p.relators) CHECK_FALSE(r.is_identity());
    }
    CHECK(pn_presentation(3).relators.size() == 2);
}

TEST_CASE("presentation relators are trivial braids") {
    for (int n = 3; n <= 4; ++n)
        for (const auto& r : pn_presentation(n).relators)
            CHECK(is_trivial(PureBraidWord(n, r)));
    for (int n = 3; n <= 5; ++n)
        for (const auto& r : bn_presentation(n).relators)
            CHECK(is_identity(BraidWord(n, r)));
}

TEST_CASE("f_I images for |I| = 3") {
    const GeneratorMap f = f_I(3, {1, 2, 3});
    const Alphabet a = Alphabet::pure_braid(3);
    CHECK(f.image(a.pair_index(1, 2)) == w2("x"));
    CHECK(f.image(a.pair_index(1, 3)) == w2("y"));
    CHECK(f.image(a.pair_index(2, 3)) == w2("y^-1 x^-1"));
}

TEST_CASE("f_I images for |I| = 4") {
    const GeneratorMap f = f_I(4, {1, 2, 3, 4});
    const Alphabet a = Alphabet::pure_braid(4);
    CHECK(f.image(a.pair_index(1, 2)) == w2("x"));
    CHECK(f.image(a.pair_index(1, 3)) == w2("y"));
    CHECK(f.image(a.pair_index(2, 3)) == w2("y^-1 x^-1"));
    CHECK(f.image(a.pair_index(1, 4)) == w2("y^-1 x^-1"));
    CHECK(f.image(a.pair_index(2, 4)) == w2("x y x^-1"));
    CHECK(f.image(a.pair_index(3, 4)) == w2("x"));
}

TEST_CASE("f_I kills generators outside I") {
    const GeneratorMap f = f_I(4, {1, 2, 4});
    const Alphabet a = Alphabet::pure_braid(4);
    CHECK(f.image(a.pair_index(1, 3)).is_identity());
    CHECK(f.image(a.pair_index(3, 4)).is_identity());
    CHECK(f.image(a.pair_index(1, 2)) == w2("x"));
    CHECK(f.image(a.pair_index(1, 4)) == w2("y"));
    CHECK(f.image(a.pair_index(2, 4)) == w2("y^-1 x^-1"));
}

TEST_CASE("f_I input validation") {
    CHECK_THROWS_AS(f_I(5, {1, 2}), InvalidIndex);
    CHECK_THROWS_AS(f_I(5, {1, 2, 3, 4, 5}), InvalidIndex);
    CHECK_THROWS_AS(f_I(4, {1, 3, 5}), InvalidIndex);
    CHECK_THROWS_AS(f_I(4, {2, 1, 3}), InvalidIndex);
    CHECK_THROWS_AS(f_I(4, {1, 1, 3}), InvalidIndex);
}

TEST_CASE("applying generator maps") {
    const GeneratorMap f = f_I(3, {1, 2, 3});
    CHECK(f.apply(center_element(3).word()).is_identity());
    CHECK(f.apply(ReducedWord(Alphabet::pure_braid(3))).is_identity());

    const ReducedWord witness =
        parse_word("[[A[1,2],A[2,3]],[A[2,3],A[3,4]]]", Alphabet::pure_braid(4));
    CHECK(f_I(4, {1, 2, 3}).apply(witness).is_identity());

    std::mt19937_64 rng(99001);
    const Alphabet a = Alphabet::pure_braid(3);
    for (int trial = 0; trial < 50; ++trial) {
        const ReducedWord u = random_word(rng, a, static_cast<int>(rng() % 10));
        const ReducedWord v = random_word(rng, a, static_cast<int>(rng() % 10));
        CHECK(f.apply(u * v) == f.apply(u) * f.apply(v));
    }
}

TEST_CASE("relator verification") {
    for (int n = 3; n <= 5; ++n)
        for (int i = 1; i <= n - 2; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    GeneratorMap f = f_I(n, {i, j, k});
                    CHECK(f.verify());
                    CHECK(f.verified());
                }

    // dropping the A[2,3] image breaks a relator
    GeneratorMap broken(pn_presentation(3), f2, {w2("x"), w2("y"), w2("1")});
    CHECK_FALSE(broken.verify());

    // identity generator map on the P_4 presentation
    const Presentation p4 = pn_presentation(4);
    std::vector<ReducedWord> ids;
    for (int letter = 0; letter < p4.alphabet.size(); ++letter)
        ids.push_back(ReducedWord::generator(p4.alphabet, letter));
    GeneratorMap identity_map(p4, p4.alphabet, ids);
    CHECK(identity_map.verify());
}

TEST_CASE("F_2 automorphism certification") {
    const F2Auto lambda1 =
        F2Auto::checked(FreeEndo(2, {w2("x"), w2("x^-1 y^-1")}),
                        FreeEndo(2, {w2("x"), w2("y^-1 x^-1")}));
    CHECK(lambda1.forward().apply(w2("y")) == w2("x^-1 y^-1"));

    const F2Auto lambda2 = F2Auto::checked(FreeEndo(2, {w2("x y x^-1"), w2("x")}),
                                           FreeEndo(2, {w2("y"), w2("y^-1 x y")}));
    CHECK(lambda2.forward().apply(w2("x")) == w2("x y x^-1"));

    // wrong inverse
    CHECK_THROWS_AS(F2Auto::checked(FreeEndo(2, {w2("x"), w2("x^-1 y^-1")}),
                                    FreeEndo(2, {w2("x"), w2("y")})),
                    NotAutomorphism);
    // not an automorphism at all
    CHECK_THROWS_AS(F2Auto::checked(FreeEndo(2, {w2("x"), w2("x")}),
                                    FreeEndo(2, {w2("x"), w2("x")})),
                    NotAutomorphism);
}

TEST_CASE("postcomposition with F_2 automorphisms") {
    const GeneratorMap f = f_I(3, {1, 2, 3});
    const F2Auto identity = F2Auto::checked(FreeEndo::identity(2), FreeEndo::identity(2));
    std::vector<ReducedWord> same = compose_with_f2_auto(f, identity).images();
    CHECK(same == f.images());

    const F2Auto lambda1 =
        F2Auto::checked(FreeEndo(2, {w2("x"), w2("x^-1 y^-1")}),
                        FreeEndo(2, {w2("x"), w2("y^-1 x^-1")}));
    const GeneratorMap twisted = compose_with_f2_auto(f, lambda1);
    const Alphabet a = Alphabet::pure_braid(3);
    CHECK(twisted.image(a.pair_index(1, 3)) == w2("x^-1 y^-1"));
}

TEST_CASE("an automorphism carrying a generating pair to the standard basis") {
    // u = x y, v = y generate F_2; the map u -> x, v -> y has an evident inverse
    const ReducedWord u = w2("x y"), v = w2("y");
    REQUIRE(is_basis_pair(u, v));
    const F2Auto straighten = F2Auto::checked(FreeEndo(2, {w2("x y^-1"), w2("y")}),
                                              FreeEndo(2, {w2("x y"), w2("y")}));
    CHECK(straighten.forward().apply(u) == w2("x"));
    CHECK(straighten.forward().apply(v) == w2("y"));
}

TEST_CASE("the four-to-three strand map") {
    GeneratorMap sigma_map = b4_to_b3_sigma();
    CHECK(sigma_map.verify());

    GeneratorMap gstar = b4_to_b3_pure();
    CHECK(gstar.verify());
    const Alphabet a4 = Alphabet::pure_braid(4);
    const GeneratorMap f3 = f_I(3, {1, 2, 3});
    CHECK(f3.apply(gstar.image(a4.pair_index(1, 2))) == w2("x"));
    CHECK(f3.apply(gstar.image(a4.pair_index(3, 4))) == w2("x"));
    CHECK(f3.apply(gstar.image(a4.pair_index(1, 4))) == w2("y^-1 x^-1"));
}

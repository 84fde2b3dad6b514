#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/words.hpp"
#include "test_util.hpp"

#include <random>

using namespace braids;
using namespace braids::testing;

namespace {
const Alphabet f2 = Alphabet::free_group(2);
const ReducedWord x = ReducedWord::generator(f2, 0);
const ReducedWord y = ReducedWord::generator(f2, 1);
}  // namespace

TEST_CASE("alphabets") {
    CHECK(Alphabet::free_group(3).size() == 3);
    CHECK(Alphabet::sigma_braid(4).size() == 3);
    CHECK(Alphabet::pure_braid(4).size() == 6);
    CHECK(Alphabet::pure_braid(2).size() == 1);

    const Alphabet p5 = Alphabet::pure_braid(5);
    int idx = 0;
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            CHECK(p5.pair_index(i, j) == idx);
            CHECK(p5.index_pair(idx) == std::pair<int, int>{i, j});
            ++idx;
        }
    CHECK_THROWS_AS(p5.pair_index(3, 3), InvalidIndex);
    CHECK_THROWS_AS(p5.pair_index(0, 2), InvalidIndex);
    CHECK(p5.letter_name(0) == "A[1,2]");
    CHECK(f2.letter_name(0) == "x");
    CHECK(Alphabet::sigma_braid(3).letter_name(1) == "s2");
}

TEST_CASE("free reduction basics") {
    CHECK(from_letters(f2, {{0, 1}, {0, -1}}).is_identity());
    CHECK(from_letters(f2, {{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == x.pow(2));
    CHECK_THROWS_AS(ReducedWord::reduce(f2, {{5, 1}}), InvalidIndex);
}

TEST_CASE("reduction agrees with the repeated-scan oracle") {
    std::mt19937_64 rng(7101);
    for (int trial = 0; trial < 300; ++trial) {
        const int len = static_cast<int>(rng() % 41);
        const Letters raw = random_letters(rng, 2, len);
        const ReducedWord w = from_letters(f2, raw);
        CHECK(to_letters(w) == naive_reduce(raw));
        // idempotence
        CHECK(from_letters(f2, to_letters(w)) == w);
    }
}

TEST_CASE("confluence: random cancellation order") {
    std::mt19937_64 rng(7102);
    const Alphabet f3 = Alphabet::free_group(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int len = static_cast<int>(rng() % 61);
        const Letters raw = random_letters(rng, 3, len);
        CHECK(to_letters(from_letters(f3, raw)) == naive_reduce(raw, &rng));
    }
}

TEST_CASE("multiplication") {
    const ReducedWord e(f2);
    const ReducedWord w = x * y.inverse() * x;
    CHECK(e * w == w);
    CHECK(w * e == w);
    CHECK((x * x.inverse()).is_identity());
    CHECK((x * y) * (y.inverse() * x) == x.pow(2));
    CHECK_THROWS_AS(x * ReducedWord::generator(Alphabet::free_group(3), 0), AlphabetMismatch);
}

TEST_CASE("inverse") {
    CHECK(ReducedWord(f2).inverse().is_identity());
    CHECK((x * y.inverse()).inverse() == y * x.inverse());
    std::mt19937_64 rng(7103);
    for (int trial = 0; trial < 100; ++trial) {
        const ReducedWord w = random_word(rng, f2, static_cast<int>(rng() % 30));
        CHECK((w * w.inverse()).is_identity());
        CHECK(w.inverse().inverse() == w);
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(7104);
    for (int trial = 0; trial < 100; ++trial) {
        const ReducedWord a = random_word(rng, f2, static_cast<int>(rng() % 20));
        const ReducedWord b = random_word(rng, f2, static_cast<int>(rng() % 20));
        const ReducedWord c = random_word(rng, f2, static_cast<int>(rng() % 20));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("powers") {
    CHECK(x.pow(0).is_identity());
    CHECK(x.pow(5) == ReducedWord::generator(f2, 0, 5));
    const ReducedWord w = x * y * x.inverse();
    CHECK(w.pow(3) == x * y.pow(3) * x.inverse());
    CHECK(w.pow(-2) == x * y.pow(-2) * x.inverse());
    const ReducedWord u = x * y;  // cyclically reduced, length grows linearly
    CHECK(u.pow(3) == x * y * x * y * x * y);
    CHECK(u.pow(-1) == y.inverse() * x.inverse());
    // beyond-int32 exponents stay cheap on conjugates of a single letter
    const std::uint64_t old_cap = max_word_letters();
    set_max_word_letters(3'000'000'000'000'000ULL);
    const BigInt big("1234567890123456");
    CHECK(w.pow(big) == x * ReducedWord::generator(f2, 1, big) * x.inverse());
    CHECK(w.pow(big).pow(2) == x * ReducedWord::generator(f2, 1, big * 2) * x.inverse());
    set_max_word_letters(old_cap);
}

TEST_CASE("commutator") {
    const ReducedWord e(f2);
    CHECK(commutator(x, x).is_identity());
    CHECK(commutator(x, y) == x * y * x.inverse() * y.inverse());
    CHECK(commutator(e, x * y).is_identity());
}

TEST_CASE("exponent vectors") {
    const ExponentVector zero = {0, 0};
    CHECK(commutator(x, y).exponent_vector() == zero);
    CHECK((x.pow(2) * y.inverse()).exponent_vector() == ExponentVector{2, -1});

    std::mt19937_64 rng(7105);
    for (int trial = 0; trial < 100; ++trial) {
        const ReducedWord u = random_word(rng, f2, static_cast<int>(rng() % 25));
        const ReducedWord v = random_word(rng, f2, static_cast<int>(rng() % 25));
        ExponentVector sum = u.exponent_vector();
        const ExponentVector vv = v.exponent_vector();
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vv[i];
        CHECK((u * v).exponent_vector() == sum);
        // oracle: plain letter sums
        ExponentVector naive(2, BigInt(0));
        for (const auto& [letter, sign] : to_letters(u)) naive[static_cast<std::size_t>(letter)] += sign;
        CHECK(u.exponent_vector() == naive);
    }
}

TEST_CASE("basis pair test") {
    CHECK(is_basis_pair(x, y));
    CHECK_FALSE(is_basis_pair(x, x));
    CHECK(is_basis_pair(x, y.inverse() * x.inverse()));  // det((1,0),(-1,-1)) = -1
    CHECK_FALSE(is_basis_pair(x, y.pow(2)));
    CHECK_THROWS_AS(is_basis_pair(ReducedWord::generator(Alphabet::free_group(3), 0),
                                  ReducedWord::generator(Alphabet::free_group(3), 1)),
                    AlphabetMismatch);
}

TEST_CASE("word length guardrail") {
    const std::uint64_t old_cap = max_word_letters();
    set_max_word_letters(10);
    CHECK_THROWS_AS(x.pow(11), WordTooLong);
    CHECK_THROWS_AS((x * y).pow(6), WordTooLong);
    set_max_word_letters(old_cap);
    CHECK(x.pow(11) == ReducedWord::generator(f2, 0, 11));
}

TEST_CASE("substitution matches per-letter application") {
    std::mt19937_64 rng(7106);
    const std::vector<ReducedWord> images = {x * y * x.inverse(), y.inverse()};
    for (int trial = 0; trial < 50; ++trial) {
        const ReducedWord w = random_word(rng, f2, static_cast<int>(rng() % 20));
        ReducedWord expected(f2);
        for (const auto& [letter, sign] : to_letters(w))
            expected = expected * (sign > 0 ? images[static_cast<std::size_t>(letter)]
                                            : images[static_cast<std::size_t>(letter)].inverse());
        CHECK(substitute(w, f2, images) == expected);
    }
}

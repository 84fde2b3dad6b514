#pragma once

#include "braids/words.hpp"

#include <random>
#include <utility>
#include <vector>

namespace braids::testing {

using Letters = std::vector<std::pair<int, int>>;  // (letter, +-1)

// Repeated-scan reducer over single signed letters, independent of the
// syllable stack used by ReducedWord. The scan order is randomized when an
// rng is supplied, which exercises confluence.
inline Letters naive_reduce(Letters letters, std::mt19937_64* rng = nullptr) {
    for (;;) {
        std::vector<std::size_t> cancellable;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i].first == letters[i + 1].first &&
                letters[i].second == -letters[i + 1].second)
                cancellable.push_back(i);
        if (cancellable.empty()) return letters;
        std::size_t pick = cancellable.front();
        if (rng) pick = cancellable[(*rng)() % cancellable.size()];
        letters.erase(letters.begin() + static_cast<long>(pick),
                      letters.begin() + static_cast<long>(pick) + 2);
    }
}

inline ReducedWord from_letters(const Alphabet& a, const Letters& ls) {
    std::vector<std::pair<int, BigInt>> raw;
    raw.reserve(ls.size());
    for (const auto& [letter, sign] : ls) raw.emplace_back(letter, sign);
    return ReducedWord::reduce(a, raw);
}

inline Letters to_letters(const ReducedWord& w) {
    Letters out;
    for (const auto& s : w.syllables()) {
        const int sign = s.exp < 0 ? -1 : 1;
        BigInt reps = s.exp < 0 ? BigInt(-s.exp) : s.exp;
        for (BigInt t = 0; t < reps; ++t) out.emplace_back(s.letter, sign);
    }
    return out;
}

inline Letters random_letters(std::mt19937_64& rng, int alphabet_size, int length) {
    Letters out;
    std::uniform_int_distribution<int> pick(0, alphabet_size - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < length; ++i) out.emplace_back(pick(rng), sign(rng) ? 1 : -1);
    return out;
}

inline ReducedWord random_word(std::mt19937_64& rng, const Alphabet& a, int length) {
    return from_letters(a, random_letters(rng, a.size(), length));
}

}  // namespace braids::testing

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braids {

using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlphabetMismatch : Error {
    using Error::Error;
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct WordTooLong : Error {
    using Error::Error;
};

/// Guardrail on reduced word length (total letter count, summed over
/// syllable exponents). Operations that would exceed it throw WordTooLong.
std::uint64_t max_word_letters();
void set_max_word_letters(std::uint64_t cap);

enum class AlphabetKind { FreeGroup, SigmaBraid, PureBraid };

// A ranked generating alphabet: x_1..x_k, sigma_1..sigma_{n-1}, or the
// pure braid generators A_{i,j} (1 <= i < j <= n) in lexicographic order.
class Alphabet {
public:
    static Alphabet free_group(int rank);
    static Alphabet sigma_braid(int strands);
    static Alphabet pure_braid(int strands);

    AlphabetKind kind() const { return kind_; }
    int param() const { return param_; }  // rank k, or strand count n
    int size() const;

    // PureBraid letter index <-> pair (i, j), 1-based, i < j.
    int pair_index(int i, int j) const;
    std::pair<int, int> index_pair(int letter) const;

    std::string letter_name(int letter) const;
    void check_letter(int letter) const;

    bool operator==(const Alphabet&) const = default;

private:
    Alphabet(AlphabetKind kind, int param);
    AlphabetKind kind_;
    int param_;
};

struct Syllable {
    int letter;   // 0-based index into the alphabet
    BigInt exp;   // nonzero
    bool operator==(const Syllable&) const = default;
};

using ExponentVector = std::vector<BigInt>;

// A freely reduced word in syllable (run-length) form: adjacent syllables
// have distinct letters and no exponent is zero. The empty word is the
// identity. Immutable after construction.
class ReducedWord {
public:
    explicit ReducedWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    // Free reduction of a raw signed-letter sequence (exp may be any integer).
    static ReducedWord reduce(const Alphabet& alphabet,
                              const std::vector<std::pair<int, BigInt>>& raw);
    static ReducedWord generator(const Alphabet& alphabet, int letter, BigInt exp = 1);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }
    BigInt letter_length() const;

    ReducedWord operator*(const ReducedWord& rhs) const;
    ReducedWord inverse() const;
    ReducedWord pow(const BigInt& e) const;

    ExponentVector exponent_vector() const;

    bool operator==(const ReducedWord&) const = default;

    std::string str() const;

private:
    friend ReducedWord unsafe_from_reduced(Alphabet, std::vector<Syllable>);
    Alphabet alphabet_;
    std::vector<Syllable> syllables_;
};

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v);

// Generator-wise substitution: replaces each syllable g^e of w by
// images[g]^e (words over `target`) and reduces in a single pass.
ReducedWord substitute(const ReducedWord& w, const Alphabet& target,
                       const std::vector<ReducedWord>& images);

// True iff the exponent vectors of u, v form a 2x2 matrix of determinant +-1.
// Only meaningful (and only allowed) over FreeGroup(2).
bool is_basis_pair(const ReducedWord& u, const ReducedWord& v);

}  // namespace braids

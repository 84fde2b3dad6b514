#pragma once

#include "braids/words.hpp"

#include <vector>

namespace braids {

struct NotPure : Error {
    using Error::Error;
};

// Where each strand ends: end_of(i) is the final position of the strand
// starting at position i (1-based).
class Permutation {
public:
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(map_.size()); }
    int end_of(int start) const;
    bool is_identity() const;

    // Diagram order: this braid first, then the next one.
    Permutation then(const Permutation& next) const;
    void swap_positions(int k);  // crossing of positions k, k+1

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

// A word in the sigma generators of B_n. Free reduction is valid but not
// complete here; equality is decided through the Artin action.
class BraidWord {
public:
    explicit BraidWord(int strands)
        : strands_(strands), word_(Alphabet::sigma_braid(strands)) {}
    BraidWord(int strands, ReducedWord word);

    int strands() const { return strands_; }
    const ReducedWord& word() const { return word_; }

    BraidWord operator*(const BraidWord& rhs) const;
    BraidWord inverse() const { return BraidWord(strands_, word_.inverse()); }

private:
    int strands_;
    ReducedWord word_;
};

// A word in the pure braid generators A_{i,j}.
class PureBraidWord {
public:
    explicit PureBraidWord(int strands)
        : strands_(strands), word_(Alphabet::pure_braid(strands)) {}
    PureBraidWord(int strands, ReducedWord word);

    int strands() const { return strands_; }
    const ReducedWord& word() const { return word_; }

    PureBraidWord operator*(const PureBraidWord& rhs) const;
    PureBraidWord inverse() const { return PureBraidWord(strands_, word_.inverse()); }

private:
    int strands_;
    ReducedWord word_;
};

// An endomorphism of a free group, given by generator images.
class FreeEndo {
public:
    static FreeEndo identity(int rank);
    FreeEndo(int rank, std::vector<ReducedWord> images);

    int rank() const { return rank_; }
    const ReducedWord& image(int letter) const { return images_.at(static_cast<std::size_t>(letter)); }
    const std::vector<ReducedWord>& images() const { return images_; }

    ReducedWord apply(const ReducedWord& w) const;

    // Sequential composition: this endomorphism first, then `next`.
    FreeEndo then(const FreeEndo& next) const;

    bool is_identity() const;
    bool operator==(const FreeEndo&) const = default;

private:
    int rank_;
    std::vector<ReducedWord> images_;
};

// The sigma-word A_{i,j} = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1.
BraidWord pure_generator_sigma(int i, int j, int n);
// The equivalent form s_i^-1...s_{j-2}^-1 s_{j-1}^2 s_{j-2}...s_i.
BraidWord pure_generator_sigma_alt(int i, int j, int n);

// Action on F_n fixed by s_k: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k.
// Words act on the right: artin_action(uv) = artin_action(u).then(artin_action(v)).
FreeEndo artin_action(const BraidWord& b);

// The engine's equality oracle for braid words.
bool is_identity(const BraidWord& b);
bool braid_equal(const BraidWord& u, const BraidWord& v);

Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

BraidWord expand_to_sigma(const PureBraidWord& p);
bool is_trivial(const PureBraidWord& p);
bool pure_equal(const PureBraidWord& u, const PureBraidWord& v);

// Generator map A_{i,j} -> 1 if k in {i,j}, else A with indices shifted past k.
PureBraidWord delete_strand(const PureBraidWord& p, int k);

// Nontrivial, but trivial after deleting any one strand.
bool brunnian_check(const PureBraidWord& p);

// Z_n = (A_{1,2})(A_{1,3}A_{2,3})...(A_{1,n}...A_{n-1,n}).
PureBraidWord center_element(int n);

// Rewrite a pure sigma-word as a word in the A_{i,j}. The contract is
// equality of Artin actions, not a normal form.
PureBraidWord comb(const BraidWord& b);

}  // namespace braids

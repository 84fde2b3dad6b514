#pragma once

#include "braids/braid.hpp"
#include "braids/words.hpp"

#include <vector>

namespace braids {

struct NotAutomorphism : Error {
    using Error::Error;
};

struct UnverifiedMap : Error {
    using Error::Error;
};

struct Presentation {
    Alphabet alphabet;
    std::vector<ReducedWord> relators;
};

// Generators A_{i,j} with the standard conjugation relators: one relator
// A_{r,s}^-1 A_{i,j} A_{r,s} (rhs)^-1 for every pair with r < s < j.
Presentation pn_presentation(int n);

// Generators s_1..s_{n-1} with the braid and far-commutation relators.
Presentation bn_presentation(int n);

// Decides triviality of a word in the target group: free reduction for free
// groups (the word is trivial iff empty), the Artin action for braid targets.
bool target_word_trivial(const ReducedWord& w);

// A homomorphism between finitely presented groups, given by generator
// images. verify() checks every relator of the domain against the target
// identity oracle and records the outcome.
class GeneratorMap {
public:
    GeneratorMap(Presentation domain, Alphabet target, std::vector<ReducedWord> images);

    const Presentation& domain() const { return domain_; }
    const Alphabet& target() const { return target_; }
    const std::vector<ReducedWord>& images() const { return images_; }
    const ReducedWord& image(int letter) const { return images_.at(static_cast<std::size_t>(letter)); }

    ReducedWord apply(const ReducedWord& w) const;

    bool verify();
    bool verified() const { return verified_; }

private:
    Presentation domain_;
    Alphabet target_;
    std::vector<ReducedWord> images_;
    bool verified_ = false;
};

// The epimorphism P_n -> F_2 attached to a subset I of {1..n} with |I| = 3
// or 4: the inside generators map to x, y, y^-1 x^-1 (and for |I| = 4 also
// y^-1 x^-1, x y x^-1, x), everything else to 1.
GeneratorMap f_I(int n, const std::vector<int>& I);

// An automorphism of F_2 certified by an explicit inverse: both composites
// must reduce to the identity on the generators.
class F2Auto {
public:
    static F2Auto checked(FreeEndo forward, FreeEndo backward);
    const FreeEndo& forward() const { return forward_; }
    const FreeEndo& backward() const { return backward_; }

private:
    F2Auto(FreeEndo f, FreeEndo b) : forward_(std::move(f)), backward_(std::move(b)) {}
    FreeEndo forward_;
    FreeEndo backward_;
};

// Generator-wise postcomposition lambda . m of a map into F_2.
GeneratorMap compose_with_f2_auto(const GeneratorMap& m, const F2Auto& lambda);

// s_1 -> s_1, s_2 -> s_2, s_3 -> s_1.
GeneratorMap b4_to_b3_sigma();

// Its restriction to pure braids, with A-generator images obtained by
// combing the sigma-word images.
GeneratorMap b4_to_b3_pure();

}  // namespace braids

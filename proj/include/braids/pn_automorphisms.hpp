#pragma once

#include "braids/braid.hpp"
#include "braids/words.hpp"

#include <optional>
#include <vector>

namespace braids {

// An endomorphism of P_n given by images of the A_{i,j}. Generator-wise
// equality of composites is decided by the Artin oracle, never by word
// identity: free reduction alone is incomplete in P_n.
class PnEndo {
public:
    static PnEndo identity(int n);
    PnEndo(int n, std::vector<ReducedWord> images);

    int strands() const { return strands_; }
    const std::vector<ReducedWord>& images() const { return images_; }
    const ReducedWord& image(int letter) const { return images_.at(static_cast<std::size_t>(letter)); }

    ReducedWord apply(const ReducedWord& w) const;
    PureBraidWord apply(const PureBraidWord& p) const;

    // Sequential composition: this endomorphism first, then `next`.
    PnEndo then(const PnEndo& next) const;

    void set_inverse(std::vector<ReducedWord> inverse_images);
    const std::optional<std::vector<ReducedWord>>& inverse_images() const { return inverse_images_; }

    bool verified() const { return verified_; }
    friend bool verify_endo(PnEndo& e);

private:
    int strands_;
    std::vector<ReducedWord> images_;
    std::optional<std::vector<ReducedWord>> inverse_images_;
    bool verified_ = false;
};

// A_{i,j} -> (A_{i+1,j}...A_{j-1,j})^-1 A_{i,j}^-1 (A_{i+1,j}...A_{j-1,j}).
PnEndo xi(int n);

// Conjugation by s_k for k <= n-1; the extra k = n case inverts the last
// column of generators.
PnEndo beta(int k, int n);

// A_{1,2} -> A_{1,2} Z_n^-2, all other generators fixed.
PnEndo psi(int n);

// A_{1,2} -> A_{1,2} Z_n, A_{p,q} -> A_{p,q} Z_n^-1, (p,q) != (1,2).
PnEndo phi(int p, int q, int n);

// The beta-composite (beta_{i_1-1}...beta_1)(beta_{i_2-1}...beta_2)...
// carrying A_{i_r,i_s} to A_{r,s}.
PnEndo alpha(const std::vector<int>& I, int n);

// True iff every relator of the P_n presentation maps to a word that is
// trivial under the Artin oracle. Marks the endomorphism verified.
bool verify_endo(PnEndo& e);

struct TransvectionReport {
    bool is_transvection = false;
    std::vector<BigInt> exponents;  // t_{i,j} per generator, letter order
    BigInt exponent_sum;
    bool automorphism_sum() const { return exponent_sum == 0 || exponent_sum == -2; }
};

// Recognizes maps of the form A_{i,j} -> A_{i,j} Z_n^{t_{i,j}}. The exponent
// is forced by abelianization, then confirmed by the Artin oracle.
TransvectionReport is_transvection(const PnEndo& e);

}  // namespace braids

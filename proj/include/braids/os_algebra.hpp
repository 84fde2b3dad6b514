#pragma once

#include "braids/homomorphism.hpp"
#include "braids/words.hpp"

#include <cstddef>
#include <vector>

namespace braids {

using Rat = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rat>;

struct DimensionMismatch : Error {
    using Error::Error;
};

// Dense matrix over the exact rationals; just enough elimination machinery
// for rank, reduced row echelon form, and quotient coordinates.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const RatVector& row);

    // In-place reduced row echelon form; returns the pivot columns. Zero rows
    // are dropped, so afterwards rows() == rank.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// A subspace stored as its RREF basis, so equality of subspaces is equality
// of matrices.
class Subspace {
public:
    static Subspace from_rows(std::size_t ambient, const std::vector<RatVector>& rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    RatVector basis_row(std::size_t r) const;

    bool contains(const RatVector& v) const;
    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_ = 0;
    RatMatrix basis_;
};

// Degrees 0..2 of the Orlik-Solomon algebra of the braid arrangement on n
// strands: A^1 has basis a_{i,j}, and A^2 is Lambda^2(A^1) modulo the triple
// relations a_{i,j}a_{i,k} - a_{i,j}a_{j,k} + a_{i,k}a_{j,k}.
class OSAlgebra2 {
public:
    explicit OSAlgebra2(int n);

    int strands() const { return n_; }
    std::size_t dim1() const { return dim1_; }
    std::size_t dim2() const { return quotient_cols_.size(); }

    // The basis vector a_{i,j} of A^1.
    RatVector basis_vector(int i, int j) const;

    // The product A^1 x A^1 -> A^2 in quotient coordinates.
    RatVector mu(const RatVector& a, const RatVector& b) const;

    // Coordinates in A^2 of a raw Lambda^2 vector (basis e_P ^ e_Q, P < Q).
    RatVector project_wedge(const RatVector& wedge) const;

    std::size_t wedge_index(std::size_t p, std::size_t q) const;
    std::size_t lambda2_dim() const { return lambda2_dim_; }

    const Alphabet& letter_alphabet() const { return alphabet_; }

private:
    int n_;
    Alphabet alphabet_;  // PureBraid(n); reused for a_{i,j} indexing
    std::size_t dim1_;
    std::size_t lambda2_dim_;
    RatMatrix relation_span_;               // trailing-pivot echelon form
    std::vector<std::size_t> trailing_pivots_;
    std::vector<std::size_t> quotient_cols_;  // first maximal independent products
};

// V_I = span{a_{i,j} - a_{j,k}, a_{i,k} - a_{j,k}} for |I| = 3, and the
// two four-index combinations for |I| = 4.
Subspace v_subspace(const OSAlgebra2& os, const std::vector<int>& I);

bool is_isotropic(const OSAlgebra2& os, const Subspace& s);

// First resonance membership: dim ker(mu(a, .)) >= 2 for a != 0. For a = 0
// the differential vanishes and membership reduces to dim A^1 > 0.
bool in_R1(const OSAlgebra2& os, const RatVector& a);

// Row space of the exponent matrix of a verified map P_n -> F_2.
Subspace pullback_image(const OSAlgebra2& os, const GeneratorMap& m);

// Evidence, not proof: no coordinate direction extends V_I isotropically.
bool max_isotropic_extension_probe(const OSAlgebra2& os, const std::vector<int>& I);

}  // namespace braids

#include "braids/os_algebra.hpp"

#include <algorithm>

namespace braids {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

void RatMatrix::append_row(const RatVector& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DimensionMismatch("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> RatMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
        const Rat inv = Rat(1) / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const Rat factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    a_.resize(row * cols_);
    rows_ = row;
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.rref().size();
}

Subspace Subspace::from_rows(std::size_t ambient, const std::vector<RatVector>& rows) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(0, ambient);
    for (const auto& r : rows) {
        if (r.size() != ambient) throw DimensionMismatch("vector length mismatch");
        s.basis_.append_row(r);
    }
    s.basis_.rref();
    return s;
}

RatVector Subspace::basis_row(std::size_t r) const {
    RatVector v(ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) v[c] = basis_.at(r, c);
    return v;
}

bool Subspace::contains(const RatVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length mismatch");
    RatMatrix extended = basis_;
    extended.append_row(v);
    return extended.rank() == dim();
}

namespace {

// Echelon form where each row is normalized on its *last* nonzero entry and
// that entry is eliminated from every other row. The complement of the
// trailing pivots is then the first (in lexicographic order) maximal subset
// of basis vectors that stays independent in the quotient.
std::vector<std::size_t> trailing_echelon(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t rc = 0; rc < m.cols() && row < m.rows(); ++rc) {
        const std::size_t col = m.cols() - 1 - rc;
        std::size_t sel = row;
        while (sel < m.rows()) {
            bool trailing = m.at(sel, col) != 0;
            for (std::size_t c = col + 1; trailing && c < m.cols(); ++c)
                if (m.at(sel, c) != 0) trailing = false;
            if (trailing) break;
            ++sel;
        }
        if (sel == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(sel, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t c = 0; c <= col; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rat factor = m.at(r, col);
            for (std::size_t c = 0; c <= col; ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

OSAlgebra2::OSAlgebra2(int n) : n_(n), alphabet_(Alphabet::pure_braid(n)) {
    dim1_ = static_cast<std::size_t>(alphabet_.size());
    lambda2_dim_ = dim1_ * (dim1_ - 1) / 2;

    relation_span_ = RatMatrix(0, lambda2_dim_);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                const auto p = static_cast<std::size_t>(alphabet_.pair_index(i, j));
                const auto q = static_cast<std::size_t>(alphabet_.pair_index(i, k));
                const auto r = static_cast<std::size_t>(alphabet_.pair_index(j, k));
                RatVector rel(lambda2_dim_);
                rel[wedge_index(p, q)] = 1;
                rel[wedge_index(p, r)] = -1;
                rel[wedge_index(q, r)] = 1;
                relation_span_.append_row(rel);
            }
        }
    }
    trailing_pivots_ = trailing_echelon(relation_span_);

    std::vector<bool> is_pivot(lambda2_dim_, false);
    for (std::size_t c : trailing_pivots_) is_pivot[c] = true;
    for (std::size_t c = 0; c < lambda2_dim_; ++c)
        if (!is_pivot[c]) quotient_cols_.push_back(c);
}

RatVector OSAlgebra2::basis_vector(int i, int j) const {
    RatVector v(dim1_);
    v[static_cast<std::size_t>(alphabet_.pair_index(i, j))] = 1;
    return v;
}

std::size_t OSAlgebra2::wedge_index(std::size_t p, std::size_t q) const {
    if (p >= q || q >= dim1_) throw DimensionMismatch("bad wedge basis pair");
    return p * (2 * dim1_ - p - 1) / 2 + (q - p - 1);
}

RatVector OSAlgebra2::project_wedge(const RatVector& wedge) const {
    if (wedge.size() != lambda2_dim_) throw DimensionMismatch("wedge vector length mismatch");
    RatVector v = wedge;
    for (std::size_t r = 0; r < trailing_pivots_.size(); ++r) {
        const std::size_t t = trailing_pivots_[r];
        if (v[t] == 0) continue;
        const Rat factor = v[t];
        for (std::size_t c = 0; c <= t; ++c) v[c] -= factor * relation_span_.at(r, c);
    }
    RatVector out;
    out.reserve(quotient_cols_.size());
    for (std::size_t c : quotient_cols_) out.push_back(v[c]);
    return out;
}

RatVector OSAlgebra2::mu(const RatVector& a, const RatVector& b) const {
    if (a.size() != dim1_ || b.size() != dim1_)
        throw DimensionMismatch("mu expects vectors of dimension C(n,2)");
    RatVector wedge(lambda2_dim_);
    for (std::size_t p = 0; p < dim1_; ++p) {
        for (std::size_t q = p + 1; q < dim1_; ++q) {
            const Rat coef = a[p] * b[q] - a[q] * b[p];
            if (coef != 0) wedge[wedge_index(p, q)] = coef;
        }
    }
    return project_wedge(wedge);
}

Subspace v_subspace(const OSAlgebra2& os, const std::vector<int>& I) {
    if (I.size() != 3 && I.size() != 4) throw InvalidIndex("V_I requires |I| = 3 or 4");
    if (!std::is_sorted(I.begin(), I.end()) ||
        std::adjacent_find(I.begin(), I.end()) != I.end())
        throw InvalidIndex("I must be strictly increasing");
    if (I.front() < 1 || I.back() > os.strands()) throw InvalidIndex("I must lie in {1..n}");

    auto minus = [](RatVector a, const RatVector& b) {
        for (std::size_t t = 0; t < a.size(); ++t) a[t] -= b[t];
        return a;
    };
    auto plus = [](RatVector a, const RatVector& b) {
        for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
        return a;
    };

    std::vector<RatVector> rows;
    if (I.size() == 3) {
        const int i = I[0], j = I[1], k = I[2];
        rows.push_back(minus(os.basis_vector(i, j), os.basis_vector(j, k)));
        rows.push_back(minus(os.basis_vector(i, k), os.basis_vector(j, k)));
    } else {
        const int i = I[0], j = I[1], k = I[2], l = I[3];
        rows.push_back(minus(plus(os.basis_vector(i, j), os.basis_vector(k, l)),
                             plus(os.basis_vector(j, k), os.basis_vector(i, l))));
        rows.push_back(minus(plus(os.basis_vector(i, k), os.basis_vector(j, l)),
                             plus(os.basis_vector(j, k), os.basis_vector(i, l))));
    }
    return Subspace::from_rows(os.dim1(), rows);
}

namespace {

bool vector_is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

bool is_isotropic(const OSAlgebra2& os, const Subspace& s) {
    if (s.ambient() != os.dim1()) throw DimensionMismatch("subspace of wrong ambient dimension");
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t t = r + 1; t < s.dim(); ++t)
            if (!vector_is_zero(os.mu(s.basis_row(r), s.basis_row(t)))) return false;
    return true;
}

bool in_R1(const OSAlgebra2& os, const RatVector& a) {
    if (a.size() != os.dim1()) throw DimensionMismatch("vector of wrong dimension");
    if (vector_is_zero(a)) return os.dim1() > 0;
    RatMatrix m(0, os.dim2());
    for (std::size_t j = 0; j < os.dim1(); ++j) {
        RatVector e(os.dim1());
        e[j] = 1;
        m.append_row(os.mu(a, e));
    }
    const std::size_t kernel_dim = os.dim1() - m.rank();
    return kernel_dim >= 2;
}

Subspace pullback_image(const OSAlgebra2& os, const GeneratorMap& m) {
    if (!m.verified()) throw UnverifiedMap("pullback requires a verified homomorphism");
    if (m.target() != Alphabet::free_group(2))
        throw AlphabetMismatch("pullback requires a map into F_2");
    if (m.domain().alphabet != Alphabet::pure_braid(os.strands()))
        throw AlphabetMismatch("map domain does not match the algebra");
    std::vector<RatVector> rows(2, RatVector(os.dim1()));
    for (std::size_t letter = 0; letter < os.dim1(); ++letter) {
        const ExponentVector v = m.image(static_cast<int>(letter)).exponent_vector();
        rows[0][letter] = Rat(v[0]);
        rows[1][letter] = Rat(v[1]);
    }
    return Subspace::from_rows(os.dim1(), rows);
}

bool max_isotropic_extension_probe(const OSAlgebra2& os, const std::vector<int>& I) {
    const Subspace v = v_subspace(os, I);
    if (!is_isotropic(os, v)) return false;
    for (std::size_t c = 0; c < os.dim1(); ++c) {
        RatVector e(os.dim1());
        e[c] = 1;
        if (v.contains(e)) continue;
        bool extends = true;
        for (std::size_t r = 0; r < v.dim() && extends; ++r)
            if (!vector_is_zero(os.mu(v.basis_row(r), e))) extends = false;
        if (extends) return false;
    }
    return true;
}

}  // namespace braids

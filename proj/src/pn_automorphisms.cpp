#include "braids/pn_automorphisms.hpp"

#include "braids/homomorphism.hpp"

#include <algorithm>

namespace braids {

namespace {

ReducedWord a_gen(const Alphabet& a, int i, int j, BigInt exp = 1) {
    return ReducedWord::generator(a, a.pair_index(i, j), std::move(exp));
}

}  // namespace

PnEndo PnEndo::identity(int n) {
    const Alphabet a = Alphabet::pure_braid(n);
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) images.push_back(ReducedWord::generator(a, i));
    return PnEndo(n, std::move(images));
}

PnEndo::PnEndo(int n, std::vector<ReducedWord> images)
    : strands_(n), images_(std::move(images)) {
    const Alphabet a = Alphabet::pure_braid(n);
    if (images_.size() != static_cast<std::size_t>(a.size()))
        throw InvalidIndex("endomorphism needs one image per A-generator");
    for (const auto& w : images_)
        if (w.alphabet() != a) throw AlphabetMismatch("image over wrong alphabet");
}

ReducedWord PnEndo::apply(const ReducedWord& w) const {
    if (w.alphabet() != Alphabet::pure_braid(strands_))
        throw AlphabetMismatch("endomorphism applied to word over wrong alphabet");
    return substitute(w, w.alphabet(), images_);
}

PureBraidWord PnEndo::apply(const PureBraidWord& p) const {
    if (p.strands() != strands_) throw AlphabetMismatch("strand count mismatch");
    return PureBraidWord(strands_, apply(p.word()));
}

PnEndo PnEndo::then(const PnEndo& next) const {
    if (strands_ != next.strands_) throw AlphabetMismatch("strand count mismatch");
    std::vector<ReducedWord> images;
    images.reserve(images_.size());
    for (const auto& w : images_) images.push_back(next.apply(w));
    return PnEndo(strands_, std::move(images));
}

void PnEndo::set_inverse(std::vector<ReducedWord> inverse_images) {
    PnEndo inv(strands_, std::move(inverse_images));
    const PnEndo fwd_then_inv = then(inv);
    const PnEndo inv_then_fwd = inv.then(*this);
    const Alphabet a = Alphabet::pure_braid(strands_);
    for (int letter = 0; letter < a.size(); ++letter) {
        const ReducedWord g = ReducedWord::generator(a, letter);
        const PureBraidWord lhs(strands_, fwd_then_inv.image(letter) * g.inverse());
        const PureBraidWord rhs(strands_, inv_then_fwd.image(letter) * g.inverse());
        if (!is_trivial(lhs) || !is_trivial(rhs))
            throw NotAutomorphism("supplied inverse does not invert the endomorphism");
    }
    inverse_images_ = inv.images();
}

PnEndo xi(int n) {
    const Alphabet a = Alphabet::pure_braid(n);
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(a.size()));
    for (int letter = 0; letter < a.size(); ++letter) {
        auto [i, j] = a.index_pair(letter);
        ReducedWord tail(a);  // A_{i+1,j} ... A_{j-1,j}
        for (int m = i + 1; m < j; ++m) tail = tail * a_gen(a, m, j);
        images.push_back(tail.inverse() * a_gen(a, i, j, -1) * tail);
    }
    return PnEndo(n, std::move(images));
}

PnEndo beta(int k, int n) {
    if (k < 1 || k > n) throw InvalidIndex("beta index must satisfy 1 <= k <= n");
    const Alphabet a = Alphabet::pure_braid(n);
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(a.size()));
    for (int letter = 0; letter < a.size(); ++letter) {
        auto [i, j] = a.index_pair(letter);
        if (k == n) {
            if (j != n) {
                images.push_back(a_gen(a, i, j));
            } else {
                ReducedWord w = a_gen(a, i, n);  // A_{i,n} A_{1,i}...A_{i-1,i} A_{i,i+1}...A_{i,n-1}
                for (int m = 1; m < i; ++m) w = w * a_gen(a, m, i);
                for (int m = i + 1; m <= n - 1; ++m) w = w * a_gen(a, i, m);
                images.push_back(w.inverse());
            }
        } else if (k == i - 1) {
            images.push_back(a_gen(a, i - 1, j));
        } else if (k == i && i < j - 1) {
            const ReducedWord c = a_gen(a, i, i + 1);
            images.push_back(c.inverse() * a_gen(a, i + 1, j) * c);
        } else if (k == j - 1 && j - 1 > i) {
            images.push_back(a_gen(a, i, j - 1));
        } else if (k == j) {
            const ReducedWord c = a_gen(a, j, j + 1);
            images.push_back(c.inverse() * a_gen(a, i, j + 1) * c);
        } else {
            images.push_back(a_gen(a, i, j));
        }
    }
    return PnEndo(n, std::move(images));
}

PnEndo psi(int n) {
    const Alphabet a = Alphabet::pure_braid(n);
    const ReducedWord z = center_element(n).word();
    PnEndo e = PnEndo::identity(n);
    std::vector<ReducedWord> images = e.images();
    images[static_cast<std::size_t>(a.pair_index(1, 2))] = a_gen(a, 1, 2) * z.pow(-2);
    return PnEndo(n, std::move(images));
}

PnEndo phi(int p, int q, int n) {
    if (!(1 <= p && p < q && q <= n)) throw InvalidIndex("need 1 <= p < q <= n");
    if (p == 1 && q == 2) throw InvalidIndex("phi requires (p,q) != (1,2)");
    const Alphabet a = Alphabet::pure_braid(n);
    const ReducedWord z = center_element(n).word();
    std::vector<ReducedWord> images = PnEndo::identity(n).images();
    images[static_cast<std::size_t>(a.pair_index(1, 2))] = a_gen(a, 1, 2) * z;
    images[static_cast<std::size_t>(a.pair_index(p, q))] = a_gen(a, p, q) * z.inverse();
    return PnEndo(n, std::move(images));
}

PnEndo alpha(const std::vector<int>& I, int n) {
    if (I.size() < 2) throw InvalidIndex("alpha requires |I| >= 2");
    if (!std::is_sorted(I.begin(), I.end()) ||
        std::adjacent_find(I.begin(), I.end()) != I.end())
        throw InvalidIndex("I must be strictly increasing");
    if (I.front() < 1 || I.back() > n) throw InvalidIndex("I must lie in {1..n}");
    PnEndo e = PnEndo::identity(n);
    for (std::size_t r = 0; r < I.size(); ++r) {
        const int target = static_cast<int>(r) + 1;
        for (int k = I[r] - 1; k >= target; --k) e = e.then(beta(k, n));
    }
    return e;
}

bool verify_endo(PnEndo& e) {
    const Presentation pres = pn_presentation(e.strands());
    for (const auto& r : pres.relators)
        if (!is_trivial(PureBraidWord(e.strands(), e.apply(r)))) return false;
    e.verified_ = true;
    return true;
}

TransvectionReport is_transvection(const PnEndo& e) {
    const int n = e.strands();
    const Alphabet a = Alphabet::pure_braid(n);
    const ReducedWord z = center_element(n).word();
    TransvectionReport report;
    report.exponent_sum = 0;
    for (int letter = 0; letter < a.size(); ++letter) {
        const ReducedWord diff = e.image(letter) * ReducedWord::generator(a, letter).inverse();
        // Z_n abelianizes to the all-ones vector, so t is forced by any entry
        // once the exponent vector is constant.
        const ExponentVector v = diff.exponent_vector();
        const BigInt t = v[0];
        if (!std::all_of(v.begin(), v.end(), [&](const BigInt& c) { return c == t; }))
            return TransvectionReport{};
        if (!is_trivial(PureBraidWord(n, diff * z.pow(-t))))
            return TransvectionReport{};
        report.exponents.push_back(t);
        report.exponent_sum += t;
    }
    report.is_transvection = true;
    return report;
}

}  // namespace braids

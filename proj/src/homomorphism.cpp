#include "braids/homomorphism.hpp"

#include <algorithm>

namespace braids {

namespace {

ReducedWord a_gen(const Alphabet& a, int i, int j, BigInt exp = 1) {
    return ReducedWord::generator(a, a.pair_index(i, j), std::move(exp));
}

}  // namespace

Presentation pn_presentation(int n) {
    const Alphabet a = Alphabet::pure_braid(n);
    std::vector<ReducedWord> relators;
    // One relator per conjugation A_{r,s}^-1 A_{i,j} A_{r,s} with s < j,
    // classified by the position of i relative to r < s.
    for (int j = 3; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            for (int s = 2; s < j; ++s) {
                for (int r = 1; r < s; ++r) {
                    const ReducedWord Ars = a_gen(a, r, s);
                    const ReducedWord Aij = a_gen(a, i, j);
                    ReducedWord rhs(a);
                    if (i < r || s < i) {
                        rhs = Aij;  // disjoint or nested: they commute
                    } else if (s == i) {
                        const ReducedWord Arj = a_gen(a, r, j);
                        rhs = Arj * Aij * Arj.inverse();
                    } else if (r == i) {
                        const ReducedWord Arj = a_gen(a, r, j);
                        const ReducedWord Asj = a_gen(a, s, j);
                        rhs = Arj * Asj * Aij * Asj.inverse() * Arj.inverse();
                    } else {  // r < i < s
                        const ReducedWord c = commutator(a_gen(a, r, j), a_gen(a, s, j));
                        rhs = c * Aij * c.inverse();
                    }
                    relators.push_back(Ars.inverse() * Aij * Ars * rhs.inverse());
                }
            }
        }
    }
    return Presentation{a, std::move(relators)};
}

Presentation bn_presentation(int n) {
    const Alphabet a = Alphabet::sigma_braid(n);
    std::vector<ReducedWord> relators;
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const ReducedWord si = ReducedWord::generator(a, i - 1);
        const ReducedWord si1 = ReducedWord::generator(a, i);
        relators.push_back(si * si1 * si * (si1 * si * si1).inverse());
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            relators.push_back(commutator(ReducedWord::generator(a, j - 1),
                                          ReducedWord::generator(a, i - 1)));
    return Presentation{a, std::move(relators)};
}

bool target_word_trivial(const ReducedWord& w) {
    switch (w.alphabet().kind()) {
        case AlphabetKind::FreeGroup:
            return w.is_identity();
        case AlphabetKind::SigmaBraid:
            return is_identity(BraidWord(w.alphabet().param(), w));
        case AlphabetKind::PureBraid:
            return is_trivial(PureBraidWord(w.alphabet().param(), w));
    }
    return false;
}

GeneratorMap::GeneratorMap(Presentation domain, Alphabet target,
                           std::vector<ReducedWord> images)
    : domain_(std::move(domain)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(domain_.alphabet.size()))
        throw InvalidIndex("generator map needs one image per domain generator");
    for (const auto& w : images_)
        if (w.alphabet() != target_) throw AlphabetMismatch("image over wrong target alphabet");
}

ReducedWord GeneratorMap::apply(const ReducedWord& w) const {
    if (w.alphabet() != domain_.alphabet)
        throw AlphabetMismatch("word is not over the domain alphabet");
    return substitute(w, target_, images_);
}

bool GeneratorMap::verify() {
    for (const auto& r : domain_.relators)
        if (!target_word_trivial(apply(r))) return false;
    verified_ = true;
    return true;
}

GeneratorMap f_I(int n, const std::vector<int>& I) {
    if (I.size() != 3 && I.size() != 4)
        throw InvalidIndex("f_I requires |I| = 3 or 4");
    if (!std::is_sorted(I.begin(), I.end()) ||
        std::adjacent_find(I.begin(), I.end()) != I.end())
        throw InvalidIndex("I must be strictly increasing");
    if (I.front() < 1 || I.back() > n) throw InvalidIndex("I must lie in {1..n}");

    const Alphabet f2 = Alphabet::free_group(2);
    const ReducedWord x = ReducedWord::generator(f2, 0);
    const ReducedWord y = ReducedWord::generator(f2, 1);
    const ReducedWord yx_inv = y.inverse() * x.inverse();

    Presentation domain = pn_presentation(n);
    const Alphabet a = domain.alphabet;
    std::vector<ReducedWord> images(static_cast<std::size_t>(a.size()), ReducedWord(f2));
    auto set = [&](int r, int s, const ReducedWord& w) {
        images[static_cast<std::size_t>(a.pair_index(r, s))] = w;
    };
    if (I.size() == 3) {
        const int i = I[0], j = I[1], k = I[2];
        set(i, j, x);
        set(i, k, y);
        set(j, k, yx_inv);
    } else {
        const int i = I[0], j = I[1], k = I[2], l = I[3];
        set(i, j, x);
        set(i, k, y);
        set(j, k, yx_inv);
        set(i, l, yx_inv);
        set(j, l, x * y * x.inverse());
        set(k, l, x);
    }
    return GeneratorMap(std::move(domain), f2, std::move(images));
}

F2Auto F2Auto::checked(FreeEndo forward, FreeEndo backward) {
    if (forward.rank() != 2 || backward.rank() != 2)
        throw NotAutomorphism("F_2 automorphism must have rank 2");
    if (!forward.then(backward).is_identity() || !backward.then(forward).is_identity())
        throw NotAutomorphism("supplied inverse does not invert the map");
    if (!is_basis_pair(forward.image(0), forward.image(1)))
        throw NotAutomorphism("generator images do not abelianize to a basis");
    return F2Auto(std::move(forward), std::move(backward));
}

GeneratorMap compose_with_f2_auto(const GeneratorMap& m, const F2Auto& lambda) {
    if (m.target() != Alphabet::free_group(2))
        throw AlphabetMismatch("postcomposition requires a map into F_2");
    std::vector<ReducedWord> images;
    images.reserve(m.images().size());
    for (const auto& w : m.images()) images.push_back(lambda.forward().apply(w));
    return GeneratorMap(m.domain(), m.target(), std::move(images));
}

GeneratorMap b4_to_b3_sigma() {
    const Alphabet b3 = Alphabet::sigma_braid(3);
    std::vector<ReducedWord> images = {
        ReducedWord::generator(b3, 0),
        ReducedWord::generator(b3, 1),
        ReducedWord::generator(b3, 0),
    };
    return GeneratorMap(bn_presentation(4), b3, std::move(images));
}

GeneratorMap b4_to_b3_pure() {
    GeneratorMap sigma_map = b4_to_b3_sigma();
    Presentation domain = pn_presentation(4);
    const Alphabet a = domain.alphabet;
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(a.size()));
    for (int letter = 0; letter < a.size(); ++letter) {
        auto [i, j] = a.index_pair(letter);
        const ReducedWord sigma_image =
            sigma_map.apply(pure_generator_sigma(i, j, 4).word());
        images.push_back(comb(BraidWord(3, sigma_image)).word());
    }
    return GeneratorMap(std::move(domain), Alphabet::pure_braid(3), std::move(images));
}

}  // namespace braids

#include "braids/braid.hpp"

#include <numeric>

namespace braids {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map_.resize(static_cast<std::size_t>(n));
    std::iota(p.map_.begin(), p.map_.end(), 1);
    return p;
}

int Permutation::end_of(int start) const {
    if (start < 1 || start > degree()) throw InvalidIndex("strand index out of range");
    return map_[static_cast<std::size_t>(start - 1)];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (end_of(i) != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw InvalidIndex("permutation degree mismatch");
    Permutation out = *this;
    for (auto& v : out.map_) v = next.map_[static_cast<std::size_t>(v - 1)];
    return out;
}

void Permutation::swap_positions(int k) {
    for (auto& v : map_) {
        if (v == k) v = k + 1;
        else if (v == k + 1) v = k;
    }
}

BraidWord::BraidWord(int strands, ReducedWord word)
    : strands_(strands), word_(std::move(word)) {
    if (word_.alphabet() != Alphabet::sigma_braid(strands))
        throw AlphabetMismatch("braid word must be over the sigma alphabet of its strand count");
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (strands_ != rhs.strands_) throw AlphabetMismatch("strand count mismatch");
    return BraidWord(strands_, word_ * rhs.word_);
}

PureBraidWord::PureBraidWord(int strands, ReducedWord word)
    : strands_(strands), word_(std::move(word)) {
    if (word_.alphabet() != Alphabet::pure_braid(strands))
        throw AlphabetMismatch("pure braid word must be over the A-alphabet of its strand count");
}

PureBraidWord PureBraidWord::operator*(const PureBraidWord& rhs) const {
    if (strands_ != rhs.strands_) throw AlphabetMismatch("strand count mismatch");
    return PureBraidWord(strands_, word_ * rhs.word_);
}

FreeEndo FreeEndo::identity(int rank) {
    const Alphabet a = Alphabet::free_group(rank);
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) images.push_back(ReducedWord::generator(a, i));
    return FreeEndo(rank, std::move(images));
}

FreeEndo::FreeEndo(int rank, std::vector<ReducedWord> images)
    : rank_(rank), images_(std::move(images)) {
    const Alphabet a = Alphabet::free_group(rank);
    if (images_.size() != static_cast<std::size_t>(rank))
        throw InvalidIndex("endomorphism needs one image per generator");
    for (const auto& w : images_)
        if (w.alphabet() != a) throw AlphabetMismatch("endomorphism image over wrong alphabet");
}

ReducedWord FreeEndo::apply(const ReducedWord& w) const {
    if (w.alphabet() != Alphabet::free_group(rank_))
        throw AlphabetMismatch("endomorphism applied to word over wrong alphabet");
    return substitute(w, w.alphabet(), images_);
}

FreeEndo FreeEndo::then(const FreeEndo& next) const {
    if (rank_ != next.rank_) throw AlphabetMismatch("endomorphism rank mismatch");
    std::vector<ReducedWord> images;
    images.reserve(images_.size());
    for (const auto& w : images_) images.push_back(next.apply(w));
    return FreeEndo(rank_, std::move(images));
}

bool FreeEndo::is_identity() const {
    for (int i = 0; i < rank_; ++i)
        if (images_[static_cast<std::size_t>(i)] !=
            ReducedWord::generator(Alphabet::free_group(rank_), i))
            return false;
    return true;
}

BraidWord pure_generator_sigma(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw InvalidIndex("need 1 <= i < j <= n");
    const Alphabet a = Alphabet::sigma_braid(n);
    std::vector<std::pair<int, BigInt>> raw;
    for (int t = j - 1; t > i; --t) raw.emplace_back(t - 1, 1);
    raw.emplace_back(i - 1, 2);
    for (int t = i + 1; t <= j - 1; ++t) raw.emplace_back(t - 1, -1);
    return BraidWord(n, ReducedWord::reduce(a, raw));
}

BraidWord pure_generator_sigma_alt(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw InvalidIndex("need 1 <= i < j <= n");
    const Alphabet a = Alphabet::sigma_braid(n);
    std::vector<std::pair<int, BigInt>> raw;
    for (int t = i; t <= j - 2; ++t) raw.emplace_back(t - 1, -1);
    raw.emplace_back(j - 2, 2);
    for (int t = j - 2; t >= i; --t) raw.emplace_back(t - 1, 1);
    return BraidWord(n, ReducedWord::reduce(a, raw));
}

namespace {

// Action of a single letter s_k^sign on F_n.
FreeEndo sigma_letter_action(int n, int k0, int sign) {
    const Alphabet f = Alphabet::free_group(n);
    FreeEndo e = FreeEndo::identity(n);
    std::vector<ReducedWord> img = e.images();
    const ReducedWord xk = ReducedWord::generator(f, k0);
    const ReducedWord xk1 = ReducedWord::generator(f, k0 + 1);
    if (sign > 0) {
        img[static_cast<std::size_t>(k0)] = xk * xk1 * xk.inverse();
        img[static_cast<std::size_t>(k0 + 1)] = xk;
    } else {
        img[static_cast<std::size_t>(k0)] = xk1;
        img[static_cast<std::size_t>(k0 + 1)] = xk1.inverse() * xk * xk1;
    }
    return FreeEndo(n, std::move(img));
}

// Action of s_k^e in closed form: s_k^2 acts by conjugation with x_k x_{k+1},
// so even powers stay cheap for large exponents.
FreeEndo sigma_power_action(int n, int k0, const BigInt& e) {
    const Alphabet f = Alphabet::free_group(n);
    const BigInt m = e / 2;
    const int r = static_cast<int>((e - 2 * m).convert_to<long>());
    std::vector<ReducedWord> img = FreeEndo::identity(n).images();
    if (m != 0) {
        const ReducedWord c =
            ReducedWord::generator(f, k0) * ReducedWord::generator(f, k0 + 1);
        const ReducedWord cm = c.pow(m);
        const ReducedWord cmi = cm.inverse();
        img[static_cast<std::size_t>(k0)] = cm * ReducedWord::generator(f, k0) * cmi;
        img[static_cast<std::size_t>(k0 + 1)] = cm * ReducedWord::generator(f, k0 + 1) * cmi;
    }
    FreeEndo endo(n, std::move(img));
    if (r != 0) endo = endo.then(sigma_letter_action(n, k0, r));
    return endo;
}

}  // namespace

namespace {

// Balanced evaluation: left-to-right folding can blow up intermediate images
// on conjugate-heavy words even when the final action is small.
FreeEndo artin_range(int n, const std::vector<Syllable>& syl, std::size_t lo, std::size_t hi) {
    if (hi == lo) return FreeEndo::identity(n);
    if (hi - lo == 1) return sigma_power_action(n, syl[lo].letter, syl[lo].exp);
    const std::size_t mid = lo + (hi - lo) / 2;
    return artin_range(n, syl, lo, mid).then(artin_range(n, syl, mid, hi));
}

}  // namespace

FreeEndo artin_action(const BraidWord& b) {
    const int n = b.strands();
    return artin_range(n, b.word().syllables(), 0, b.word().syllables().size());
}

bool is_identity(const BraidWord& b) { return artin_action(b).is_identity(); }

bool braid_equal(const BraidWord& u, const BraidWord& v) {
    return is_identity(u * v.inverse());
}

Permutation permutation(const BraidWord& b) {
    Permutation p = Permutation::identity(b.strands());
    for (const auto& s : b.word().syllables())
        if (s.exp % 2 != 0) p.swap_positions(s.letter + 1);
    return p;
}

bool is_pure(const BraidWord& b) { return permutation(b).is_identity(); }

BraidWord expand_to_sigma(const PureBraidWord& p) {
    const int n = p.strands();
    const Alphabet sigma = Alphabet::sigma_braid(n);
    std::vector<ReducedWord> images;
    images.reserve(static_cast<std::size_t>(p.word().alphabet().size()));
    for (int letter = 0; letter < p.word().alphabet().size(); ++letter) {
        auto [i, j] = p.word().alphabet().index_pair(letter);
        images.push_back(pure_generator_sigma(i, j, n).word());
    }
    return BraidWord(n, substitute(p.word(), sigma, images));
}

bool is_trivial(const PureBraidWord& p) { return is_identity(expand_to_sigma(p)); }

bool pure_equal(const PureBraidWord& u, const PureBraidWord& v) {
    return is_trivial(u * v.inverse());
}

PureBraidWord delete_strand(const PureBraidWord& p, int k) {
    const int n = p.strands();
    if (k < 1 || k > n) throw InvalidIndex("strand to delete out of range");
    const Alphabet target = Alphabet::pure_braid(n - 1);
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& s : p.word().syllables()) {
        auto [i, j] = p.word().alphabet().index_pair(s.letter);
        if (i == k || j == k) continue;
        const int i2 = i > k ? i - 1 : i;
        const int j2 = j > k ? j - 1 : j;
        raw.emplace_back(target.pair_index(i2, j2), s.exp);
    }
    return PureBraidWord(n - 1, ReducedWord::reduce(target, raw));
}

bool brunnian_check(const PureBraidWord& p) {
    if (is_trivial(p)) return false;
    for (int k = 1; k <= p.strands(); ++k)
        if (!is_trivial(delete_strand(p, k))) return false;
    return true;
}

PureBraidWord center_element(int n) {
    const Alphabet a = Alphabet::pure_braid(n);
    std::vector<std::pair<int, BigInt>> raw;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) raw.emplace_back(a.pair_index(i, j), 1);
    return PureBraidWord(n, ReducedWord::reduce(a, raw));
}

namespace {

// Conjugation of the fiber free group <y_j> = <A_{j,n}> by s_k (k <= n-2):
//   s_k y_j s_k^-1:  y_k -> y_{k+1},  y_{k+1} -> y_{k+1}^-1 y_k y_{k+1}
//   s_k^-1 y_j s_k:  y_k -> y_k y_{k+1} y_k^-1,  y_{k+1} -> y_k
FreeEndo fiber_conjugation(int fiber_rank, int k0, int sign) {
    const Alphabet f = Alphabet::free_group(fiber_rank);
    std::vector<ReducedWord> img = FreeEndo::identity(fiber_rank).images();
    const ReducedWord yk = ReducedWord::generator(f, k0);
    const ReducedWord yk1 = ReducedWord::generator(f, k0 + 1);
    if (sign > 0) {
        img[static_cast<std::size_t>(k0)] = yk1;
        img[static_cast<std::size_t>(k0 + 1)] = yk1.inverse() * yk * yk1;
    } else {
        img[static_cast<std::size_t>(k0)] = yk * yk1 * yk.inverse();
        img[static_cast<std::size_t>(k0 + 1)] = yk;
    }
    return FreeEndo(fiber_rank, std::move(img));
}

std::vector<std::pair<int, int>> to_crossings(const ReducedWord& w) {
    std::vector<std::pair<int, int>> out;
    const BigInt cap(max_word_letters());
    for (const auto& s : w.syllables()) {
        BigInt reps = s.exp < 0 ? BigInt(-s.exp) : s.exp;
        if (reps > cap) throw WordTooLong("sigma word too long to comb");
        const int sign = s.exp < 0 ? -1 : 1;
        for (BigInt t = 0; t < reps; ++t) out.emplace_back(s.letter + 1, sign);
    }
    return out;
}

ReducedWord comb_impl(int n, const std::vector<std::pair<int, int>>& crossings) {
    const Alphabet pure = Alphabet::pure_braid(n);
    if (n <= 1) return ReducedWord(pure);
    if (n == 2) {
        // B_2 is infinite cyclic; a pure word is an even power of s_1.
        BigInt total = 0;
        for (const auto& [k, sign] : crossings) total += sign;
        return ReducedWord::generator(pure, pure.pair_index(1, 2), total / 2);
    }

    // Scan maintaining prefix = fiber * tail * t_p, where the fiber is a word
    // in y_j = A_{j,n}, the tail lies in B_{n-1}, and t_p = s_{n-1}...s_p is
    // the coset representative moving strand n to position p.
    const int fiber_rank = n - 1;
    const Alphabet fiber_alpha = Alphabet::free_group(fiber_rank);
    ReducedWord fiber(fiber_alpha);
    std::vector<std::pair<int, int>> tail;  // signed sigma letters of B_{n-1}
    int p = n;

    auto absorb = [&](int j, int sign) {
        ReducedWord g = ReducedWord::generator(fiber_alpha, j - 1, sign);
        for (auto it = tail.rbegin(); it != tail.rend(); ++it)
            g = fiber_conjugation(fiber_rank, it->first - 1, it->second).apply(g);
        fiber = fiber * g;
    };

    for (const auto& [k, sign] : crossings) {
        if (k == p - 1) {
            if (sign < 0) absorb(p - 1, -1);
            p = p - 1;
        } else if (k == p) {
            if (sign > 0) absorb(p, 1);
            p = p + 1;
        } else if (k < p - 1) {
            tail.emplace_back(k, sign);
        } else {  // k > p
            tail.emplace_back(k - 1, sign);
        }
    }
    if (p != n) throw NotPure("comb scan ended off the final coset");

    // b = fiber * tail; recurse on the tail over n-1 strands.
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& s : fiber.syllables())
        raw.emplace_back(pure.pair_index(s.letter + 1, n), s.exp);
    const ReducedWord rest = comb_impl(n - 1, tail);
    const Alphabet sub = Alphabet::pure_braid(n - 1);
    for (const auto& s : rest.syllables()) {
        auto [i, j] = sub.index_pair(s.letter);
        raw.emplace_back(pure.pair_index(i, j), s.exp);
    }
    return ReducedWord::reduce(pure, raw);
}

}  // namespace

PureBraidWord comb(const BraidWord& b) {
    if (!is_pure(b)) throw NotPure("comb requires a pure braid word");
    return PureBraidWord(b.strands(), comb_impl(b.strands(), to_crossings(b.word())));
}

}  // namespace braids

#include "braids/words.hpp"

#include <atomic>
#include <sstream>

namespace braids {

namespace {

std::atomic<std::uint64_t> g_max_word_letters{1'000'000};

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::uint64_t max_word_letters() { return g_max_word_letters.load(); }

void set_max_word_letters(std::uint64_t cap) { g_max_word_letters.store(cap); }

Alphabet::Alphabet(AlphabetKind kind, int param) : kind_(kind), param_(param) {}

Alphabet Alphabet::free_group(int rank) {
    if (rank < 1) throw InvalidIndex("free group rank must be >= 1");
    return Alphabet(AlphabetKind::FreeGroup, rank);
}

Alphabet Alphabet::sigma_braid(int strands) {
    if (strands < 1) throw InvalidIndex("braid group needs >= 1 strand");
    return Alphabet(AlphabetKind::SigmaBraid, strands);
}

Alphabet Alphabet::pure_braid(int strands) {
    // one strand is allowed: B_1 and P_1 are trivial, with empty alphabets
    if (strands < 1) throw InvalidIndex("pure braid group needs >= 1 strand");
    return Alphabet(AlphabetKind::PureBraid, strands);
}

int Alphabet::size() const {
    switch (kind_) {
        case AlphabetKind::FreeGroup: return param_;
        case AlphabetKind::SigmaBraid: return param_ - 1;
        case AlphabetKind::PureBraid: return param_ * (param_ - 1) / 2;
    }
    return 0;
}

int Alphabet::pair_index(int i, int j) const {
    if (kind_ != AlphabetKind::PureBraid)
        throw InvalidIndex("pair indexing requires a pure braid alphabet");
    const int n = param_;
    if (i < 1 || i >= j || j > n) throw InvalidIndex("bad generator pair (i,j)");
    // lexicographic rank of (i,j) among 1 <= i < j <= n
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += n - a;
    return idx + (j - i - 1);
}

std::pair<int, int> Alphabet::index_pair(int letter) const {
    if (kind_ != AlphabetKind::PureBraid)
        throw InvalidIndex("pair indexing requires a pure braid alphabet");
    check_letter(letter);
    const int n = param_;
    int i = 1;
    int remaining = letter;
    while (remaining >= n - i) {
        remaining -= n - i;
        ++i;
    }
    return {i, i + 1 + remaining};
}

void Alphabet::check_letter(int letter) const {
    if (letter < 0 || letter >= size())
        throw InvalidIndex("letter index " + std::to_string(letter) +
                           " out of range for alphabet of size " + std::to_string(size()));
}

std::string Alphabet::letter_name(int letter) const {
    check_letter(letter);
    switch (kind_) {
        case AlphabetKind::FreeGroup:
            if (param_ == 2) return letter == 0 ? "x" : "y";
            return "x" + std::to_string(letter + 1);
        case AlphabetKind::SigmaBraid:
            return "s" + std::to_string(letter + 1);
        case AlphabetKind::PureBraid: {
            auto [i, j] = index_pair(letter);
            return "A[" + std::to_string(i) + "," + std::to_string(j) + "]";
        }
    }
    return {};
}

namespace {

void check_length(const std::vector<Syllable>& syllables) {
    const BigInt cap = max_word_letters();
    BigInt total = 0;
    for (const auto& s : syllables) {
        total += abs_big(s.exp);
        if (total > cap)
            throw WordTooLong("reduced word exceeds the configured letter cap");
    }
}

// Push one syllable onto a reduced stack, merging and cancelling.
void push_syllable(std::vector<Syllable>& stack, int letter, const BigInt& exp) {
    if (exp == 0) return;
    if (!stack.empty() && stack.back().letter == letter) {
        stack.back().exp += exp;
        if (stack.back().exp == 0) stack.pop_back();
        return;
    }
    stack.push_back(Syllable{letter, exp});
}

// Same, but keeps `length` equal to the letter count of the reduced stack.
void push_syllable_tracked(std::vector<Syllable>& stack, int letter, const BigInt& exp,
                           BigInt& length) {
    if (exp == 0) return;
    if (!stack.empty() && stack.back().letter == letter) {
        length -= abs_big(stack.back().exp);
        stack.back().exp += exp;
        if (stack.back().exp == 0) stack.pop_back();
        else length += abs_big(stack.back().exp);
        return;
    }
    stack.push_back(Syllable{letter, exp});
    length += abs_big(exp);
}

}  // namespace

ReducedWord unsafe_from_reduced(Alphabet alphabet, std::vector<Syllable> syllables) {
    ReducedWord w(std::move(alphabet));
    w.syllables_ = std::move(syllables);
    return w;
}

ReducedWord ReducedWord::reduce(const Alphabet& alphabet,
                                const std::vector<std::pair<int, BigInt>>& raw) {
    std::vector<Syllable> stack;
    stack.reserve(raw.size());
    for (const auto& [letter, exp] : raw) {
        alphabet.check_letter(letter);
        push_syllable(stack, letter, exp);
    }
    check_length(stack);
    return unsafe_from_reduced(alphabet, std::move(stack));
}

ReducedWord ReducedWord::generator(const Alphabet& alphabet, int letter, BigInt exp) {
    alphabet.check_letter(letter);
    std::vector<Syllable> syl;
    if (exp != 0) syl.push_back(Syllable{letter, std::move(exp)});
    return unsafe_from_reduced(alphabet, std::move(syl));
}

BigInt ReducedWord::letter_length() const {
    BigInt total = 0;
    for (const auto& s : syllables_) total += abs_big(s.exp);
    return total;
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
    if (alphabet_ != rhs.alphabet_)
        throw AlphabetMismatch("cannot multiply words over different alphabets");
    std::vector<Syllable> stack = syllables_;
    stack.reserve(stack.size() + rhs.syllables_.size());
    for (const auto& s : rhs.syllables_) push_syllable(stack, s.letter, s.exp);
    check_length(stack);
    return unsafe_from_reduced(alphabet_, std::move(stack));
}

ReducedWord ReducedWord::inverse() const {
    std::vector<Syllable> syl;
    syl.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        syl.push_back(Syllable{it->letter, -it->exp});
    return unsafe_from_reduced(alphabet_, std::move(syl));
}

ReducedWord ReducedWord::pow(const BigInt& e) const {
    if (e == 0 || syllables_.empty()) return ReducedWord(alphabet_);
    if (e == 1) return *this;
    if (e == -1) return inverse();

    // Cyclic decomposition: *this = prefix . core . prefix^-1 with core
    // cyclically reduced, so core^e needs no internal cancellation.
    std::vector<Syllable> body = syllables_;
    std::vector<Syllable> prefix;
    while (body.size() >= 2 && body.front().letter == body.back().letter &&
           body.front().exp == -body.back().exp) {
        prefix.push_back(body.front());
        body.erase(body.begin());
        body.pop_back();
    }
    if (body.size() >= 2 && body.front().letter == body.back().letter) {
        // x^a m x^c with a+c != 0: rotate to (m x^{a+c}) conjugated by x^a.
        prefix.push_back(body.front());
        BigInt tail = body.front().exp + body.back().exp;
        body.erase(body.begin());
        body.back().exp = tail;
        if (body.back().exp == 0) body.pop_back();
    }

    ReducedWord core(alphabet_);
    if (body.size() == 1) {
        core = generator(alphabet_, body[0].letter, body[0].exp * e);
    } else if (!body.empty()) {
        const BigInt reps = abs_big(e);
        BigInt core_len = 0;
        for (const auto& s : body) core_len += abs_big(s.exp);
        if (reps * core_len > BigInt(max_word_letters()))
            throw WordTooLong("power exceeds the configured letter cap");
        std::vector<Syllable> repeated;
        const std::uint64_t r = reps.convert_to<std::uint64_t>();
        repeated.reserve(body.size() * r);
        if (e > 0) {
            for (std::uint64_t k = 0; k < r; ++k)
                repeated.insert(repeated.end(), body.begin(), body.end());
        } else {
            std::vector<Syllable> inv;
            inv.reserve(body.size());
            for (auto it = body.rbegin(); it != body.rend(); ++it)
                inv.push_back(Syllable{it->letter, -it->exp});
            for (std::uint64_t k = 0; k < r; ++k)
                repeated.insert(repeated.end(), inv.begin(), inv.end());
        }
        core = unsafe_from_reduced(alphabet_, std::move(repeated));
    }

    ReducedWord pre = unsafe_from_reduced(alphabet_, std::move(prefix));
    return pre * core * pre.inverse();
}

ExponentVector ReducedWord::exponent_vector() const {
    ExponentVector v(static_cast<std::size_t>(alphabet_.size()), BigInt(0));
    for (const auto& s : syllables_) v[static_cast<std::size_t>(s.letter)] += s.exp;
    return v;
}

std::string ReducedWord::str() const {
    if (syllables_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syllables_) {
        if (!first) os << ' ';
        first = false;
        os << alphabet_.letter_name(s.letter);
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v) {
    return u * v * u.inverse() * v.inverse();
}

ReducedWord substitute(const ReducedWord& w, const Alphabet& target,
                       const std::vector<ReducedWord>& images) {
    if (images.size() != static_cast<std::size_t>(w.alphabet().size()))
        throw InvalidIndex("substitution needs one image per letter");
    std::vector<Syllable> stack;
    const BigInt cap = max_word_letters();
    BigInt length = 0;
    for (const auto& s : w.syllables()) {
        const ReducedWord& img = images[static_cast<std::size_t>(s.letter)];
        if (img.alphabet() != target) throw AlphabetMismatch("image over wrong target alphabet");
        const ReducedWord piece = img.pow(s.exp);
        for (const auto& ps : piece.syllables()) {
            push_syllable_tracked(stack, ps.letter, ps.exp, length);
            if (length > cap) throw WordTooLong("substitution exceeds the configured letter cap");
        }
    }
    return unsafe_from_reduced(target, std::move(stack));
}

bool is_basis_pair(const ReducedWord& u, const ReducedWord& v) {
    const Alphabet f2 = Alphabet::free_group(2);
    if (u.alphabet() != f2 || v.alphabet() != f2)
        throw AlphabetMismatch("basis pair test requires words over the rank-2 free group");
    const ExponentVector a = u.exponent_vector();
    const ExponentVector b = v.exponent_vector();
    const BigInt det = a[0] * b[1] - a[1] * b[0];
    return det == 1 || det == -1;
}

}  // namespace braids

#include "braids/render.hpp"

#include <vector>

namespace braids {

std::string render_braid(const BraidWord& b) {
    const int n = b.strands();
    std::vector<std::string> rows(static_cast<std::size_t>(n), "--");

    auto emit = [&](int k0, int sign) {
        for (int r = 0; r < n; ++r) {
            std::string block = "----";
            if (r == k0) block = sign > 0 ? "\\\\ /" : "\\ //";
            if (r == k0 + 1) block = sign > 0 ? "/ \\\\" : "// \\";
            rows[static_cast<std::size_t>(r)] += block + "--";
        }
    };

    for (const auto& s : b.word().syllables()) {
        BigInt reps = s.exp < 0 ? BigInt(-s.exp) : s.exp;
        if (reps > BigInt(max_word_letters())) throw WordTooLong("braid word too long to render");
        const int sign = s.exp < 0 ? -1 : 1;
        for (BigInt t = 0; t < reps; ++t) emit(s.letter, sign);
    }

    std::string out;
    for (const auto& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace braids

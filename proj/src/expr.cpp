#include "braids/expr.hpp"

#include <cctype>
#include <optional>

namespace braids {

namespace {

enum class TokKind { Name, AGen, Pow, LParen, RParen, LBracket, RBracket, Comma, One, End };

struct Token {
    TokKind kind;
    std::string text;     // Name: identifier; Pow: signed digits
    int i = 0, j = 0;     // AGen indices
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {TokKind::End, "", 0, 0, start};
        const char c = text_[pos_];
        switch (c) {
            case '(': ++pos_; return {TokKind::LParen, "(", 0, 0, start};
            case ')': ++pos_; return {TokKind::RParen, ")", 0, 0, start};
            case '[': ++pos_; return {TokKind::LBracket, "[", 0, 0, start};
            case ']': ++pos_; return {TokKind::RBracket, "]", 0, 0, start};
            case ',': ++pos_; return {TokKind::Comma, ",", 0, 0, start};
            default: break;
        }
        if (c == '^') {
            ++pos_;
            std::string digits;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                digits += '-';
                ++pos_;
            }
            const std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
            if (pos_ == dstart) throw ParseError("expected integer after '^'", pos_);
            return {TokKind::Pow, digits, 0, 0, start};
        }
        if (c == '1') {
            ++pos_;
            return {TokKind::One, "1", 0, 0, start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
            // A[i,j] is a single token
            if ((name == "A" || name == "a") && pos_ < text_.size() && text_[pos_] == '[') {
                ++pos_;
                const int i = read_index();
                expect(',');
                const int j = read_index();
                expect(']');
                return {TokKind::AGen, name, i, j, start};
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
            return {TokKind::Name, name, 0, 0, start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::size_t pos() const { return pos_; }

private:
    int read_index() {
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("generator index too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected index digits", pos_);
        return static_cast<int>(v);
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class WordParser {
public:
    WordParser(std::string_view text, const Alphabet& alphabet)
        : lexer_(text), alphabet_(alphabet), tok_(lexer_.next()) {}

    ReducedWord parse() {
        ReducedWord w = parse_product();
        if (tok_.kind != TokKind::End) throw ParseError("trailing input", tok_.offset);
        return w;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    bool starts_atom() const {
        return tok_.kind == TokKind::Name || tok_.kind == TokKind::AGen ||
               tok_.kind == TokKind::LParen || tok_.kind == TokKind::LBracket ||
               tok_.kind == TokKind::One;
    }

    ReducedWord parse_product() {
        ReducedWord w(alphabet_);
        if (!starts_atom()) throw ParseError("expected a generator, '(', '[', or '1'", tok_.offset);
        while (starts_atom()) w = w * parse_term();
        return w;
    }

    ReducedWord parse_term() {
        ReducedWord w = parse_atom();
        while (tok_.kind == TokKind::Pow) {
            w = w.pow(BigInt(tok_.text));
            advance();
        }
        return w;
    }

    ReducedWord parse_atom() {
        switch (tok_.kind) {
            case TokKind::One: {
                advance();
                return ReducedWord(alphabet_);
            }
            case TokKind::Name: {
                const ReducedWord w = ReducedWord::generator(alphabet_, resolve_name(tok_));
                advance();
                return w;
            }
            case TokKind::AGen: {
                if (alphabet_.kind() != AlphabetKind::PureBraid)
                    throw ParseError("A-generators need a pure braid alphabet", tok_.offset);
                const int n = alphabet_.param();
                if (!(1 <= tok_.i && tok_.i < tok_.j && tok_.j <= n))
                    throw ParseError("generator indices out of range for " + std::to_string(n) +
                                         " strands",
                                     tok_.offset);
                const ReducedWord w =
                    ReducedWord::generator(alphabet_, alphabet_.pair_index(tok_.i, tok_.j));
                advance();
                return w;
            }
            case TokKind::LParen: {
                advance();
                ReducedWord w = parse_product();
                if (tok_.kind != TokKind::RParen) throw ParseError("expected ')'", tok_.offset);
                advance();
                return w;
            }
            case TokKind::LBracket: {
                advance();
                ReducedWord u = parse_product();
                if (tok_.kind != TokKind::Comma) throw ParseError("expected ',' in commutator", tok_.offset);
                advance();
                ReducedWord v = parse_product();
                if (tok_.kind != TokKind::RBracket) throw ParseError("expected ']'", tok_.offset);
                advance();
                return commutator(u, v);
            }
            default:
                throw ParseError("expected a generator, '(', '[', or '1'", tok_.offset);
        }
    }

    int resolve_name(const Token& tok) const {
        const std::string& name = tok.text;
        auto fail = [&]() -> int {
            throw ParseError("unknown generator '" + name + "'", tok.offset);
        };
        std::size_t head = 0;
        while (head < name.size() && std::isalpha(static_cast<unsigned char>(name[head]))) ++head;
        const std::string stem = name.substr(0, head);
        std::optional<long> num;
        if (head < name.size()) num = std::stol(name.substr(head));

        switch (alphabet_.kind()) {
            case AlphabetKind::FreeGroup:
                if (alphabet_.param() == 2 && !num) {
                    if (stem == "x") return 0;
                    if (stem == "y") return 1;
                }
                if (stem == "x" && num && *num >= 1 && *num <= alphabet_.param())
                    return static_cast<int>(*num - 1);
                return fail();
            case AlphabetKind::SigmaBraid:
                if (stem == "s" && num && *num >= 1 && *num <= alphabet_.param() - 1)
                    return static_cast<int>(*num - 1);
                return fail();
            case AlphabetKind::PureBraid:
                return fail();
        }
        return fail();
    }

    Lexer lexer_;
    Alphabet alphabet_;
    Token tok_;
};

}  // namespace

ReducedWord parse_word(std::string_view text, const Alphabet& alphabet) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) return ReducedWord(alphabet);  // empty input is the identity
    return WordParser(text, alphabet).parse();
}

std::string print_word(const ReducedWord& w) { return w.str(); }

RatVector parse_linear_combination(std::string_view text, const OSAlgebra2& os) {
    RatVector out(os.dim1());
    std::size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> BigInt {
        const std::size_t start = pos;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
        if (digits.empty()) throw ParseError("expected digits", start);
        return BigInt(digits);
    };

    skip_ws();
    if (pos == text.size()) throw ParseError("empty linear combination", pos);
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        Rat sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", pos);
        }
        first = false;

        Rat coef = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const BigInt num = read_digits();
            BigInt den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = read_digits();
                if (den == 0) throw ParseError("zero denominator", pos);
            }
            coef = Rat(num, den);
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size() || (text[pos] != 'a' && text[pos] != 'A'))
            throw ParseError("expected basis element a[i,j]", pos);
        ++pos;
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
        ++pos;
        skip_ws();
        const BigInt bi = read_digits();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
        skip_ws();
        const BigInt bj = read_digits();
        skip_ws();
        if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
        ++pos;
        const int i = bi.convert_to<int>();
        const int j = bj.convert_to<int>();
        if (!(1 <= i && i < j && j <= os.strands()))
            throw ParseError("basis indices out of range", pos);
        out[static_cast<std::size_t>(os.letter_alphabet().pair_index(i, j))] += sign * coef;
        skip_ws();
    }
    return out;
}

}  // namespace braids

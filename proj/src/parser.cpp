#include "socle/parser.hpp"

#include <algorithm>
#include <cctype>

#include "socle/errors.hpp"

namespace socle {

namespace {

class Parser {
public:
    Parser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

    Polynomial parse_all() {
        skip();
        if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip();
        if (pos_ < src_.size()) throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
        return p;
    }

private:
    std::string_view src_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        char c = peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Polynomial t = term();
        acc = negate ? -t : t;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial next = term();
            acc = c == '+' ? acc + next : acc - next;
        }
        return acc;
    }

    static bool starts_factor(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                throw ParseError("division is not supported", pos_);
            } else if (starts_factor(c)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("expected a nonnegative integer exponent", pos_);
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            const auto digits = std::string(src_.substr(start, pos_ - start));
            if (digits.size() > 6) throw ParseError("exponent too large", start);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Polynomial primary() {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            const std::string name(src_.substr(start, pos_ - start));
            const int idx = ring_->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string text(src_.substr(start, pos_ - start));
        // A slash directly followed by digits belongs to a rational literal.
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            const std::size_t den_start = ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            const std::string den(src_.substr(den_start, pos_ - den_start));
            if (mpz_class(den) == 0) throw ParseError("zero denominator", den_start);
            text += "/" + den;
        }
        Scalar value(text);
        value.canonicalize();
        return Polynomial::constant(ring_, ring_->field().normalize(value));
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const RingPtr& ring) { return Parser(src, ring).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view src, const RingPtr& ring) {
    std::vector<Polynomial> out;
    std::size_t depth = 0, start = 0;
    bool any = false;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        const char c = i < src.size() ? src[i] : ',';
        if (c == '(') ++depth;
        if (c == ')' && depth) --depth;
        if (c == ',' && depth == 0) {
            auto piece = src.substr(start, i - start);
            const bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
            if (blank && (i < src.size() || any)) throw ParseError("empty list element", start);
            if (!blank) {
                try {
                    out.push_back(parse_polynomial(piece, ring));
                } catch (const ParseError& e) {
                    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                                     start + e.position());
                }
                any = true;
            }
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> scan_variables(std::string_view src) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < src.size();) {
        if (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            std::string name(src.substr(i, j - i));
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(src[i]))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        } else {
            ++i;
        }
    }
    return names;
}

}  // namespace socle

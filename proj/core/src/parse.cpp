#include "yev/parse.hpp"

#include <cctype>

#include "yev/errors.hpp"

namespace yev {

namespace {

class Parser {
public:
    Parser(const std::string& text, AlgebraSpec::Ptr spec)
        : text_(text), spec_(std::move(spec)) {}

    NCElement run() {
        NCElement e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
        return normal_form(e);
    }

private:
    const std::string& text_;
    AlgebraSpec::Ptr spec_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned long read_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected number", pos_);
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    NCElement expr() {
        skip_ws();
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        NCElement e = term().scaled(rat(sign));
        while (true) {
            skip_ws();
            if (eat('+')) e = e + term();
            else if (eat('-')) e = e - term();
            else break;
        }
        return e;
    }

    NCElement term() {
        NCElement e = factor();
        while (true) {
            skip_ws();
            if (eat('*')) e = e * factor();
            else break;
        }
        return e;
    }

    NCElement factor() {
        NCElement a = atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            unsigned long k = read_uint();
            NCElement r = NCElement::constant(spec_, rat(1));
            for (unsigned long i = 0; i < k; ++i) r = r * a;
            return r;
        }
        return a;
    }

    NCElement atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCElement e = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = read_uint();
            Rational q(static_cast<long>(num));
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                unsigned long den = read_uint();
                if (den == 0) throw SyntaxError("zero denominator", pos_);
                q = Rational(static_cast<long>(num), static_cast<long>(den));
                q.canonicalize();
            }
            return NCElement::constant(spec_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return name_atom();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    NCElement name_atom() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\''))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        // spectral ring symbol?
        if (spectral_ring()->index_of(name) >= 0 && spec_->family_of_name(name) < 0)
            return NCElement::constant(spec_, CentralPoly::symbol(spectral_ring(), name));
        int fi = spec_->family_of_name(name);
        if (fi < 0) throw UnknownSymbol("unknown symbol '" + name + "' at offset " + std::to_string(start));
        const Family& fam = spec_->families()[static_cast<std::size_t>(fi)];
        if (fam.cls == FamilyClass::Central)
            return spec_->generator_element(spec_, name, 0, false);
        bool upper;
        if (pos_ < text_.size() && text_[pos_] == '_') upper = false;
        else if (pos_ < text_.size() && text_[pos_] == '^') upper = true;
        else throw SyntaxError("generator '" + name + "' needs an index", pos_);
        ++pos_;
        unsigned long idx = read_uint();
        try {
            return spec_->generator_element(spec_, name, static_cast<int>(idx), upper);
        } catch (const IndexOutOfRange&) {
            throw IndexOutOfRange(name + (upper ? "^" : "_") + std::to_string(idx) +
                              " out of range");
        }
    }
};

} // namespace

NCElement parse(const std::string& text, const AlgebraSpec::Ptr& spec) {
    return Parser(text, spec).run();
}

} // namespace yev

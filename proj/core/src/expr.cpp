#include "thhseg/expr.hpp"

#include "thhseg/errors.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace thhseg {

namespace {

class Parser {
public:
    Parser(const GradedAlgebra& A, std::string_view text) : A_(A) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                chars_.push_back(text[i]);
                offsets_.push_back(i);
            }
        end_offset_ = text.size();
    }

    Element parse() {
        if (chars_.empty())
            fail("empty expression");
        Element out;
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = get() == '-';
        for (;;) {
            Element t = term();
            A_.axpy(out, A_.field().sign(negative ? 1 : 0), t);
            if (done())
                break;
            const char c = peek();
            if (c != '+' && c != '-')
                fail(std::string("unexpected '") + c + "'");
            negative = get() == '-';
        }
        return out;
    }

private:
    bool done() const { return pos_ >= chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[pos_]; }
    char get() { return chars_[pos_++]; }
    std::size_t offset() const { return done() ? end_offset_ : offsets_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset()); }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a digit");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > std::numeric_limits<int>::max())
                fail("integer too large");
        }
        return v;
    }

    int exponent() {
        const bool braced = peek() == '{';
        if (braced)
            ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        const auto v = static_cast<int>(integer());
        if (braced)
            expect('}');
        return negative ? -v : v;
    }

    std::string identifier() {
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a generator name");
        std::string name;
        while (std::isalpha(static_cast<unsigned char>(peek())))
            name += get();
        while (std::isdigit(static_cast<unsigned char>(peek())))
            name += get();
        return name;
    }

    Element factor() {
        const std::size_t at = offset();
        std::string name = identifier();
        if (name == "s" && peek() == '(') {
            ++pos_;
            name = "s(" + identifier() + ")";
            expect(')');
        }
        const auto id = A_.table().find(name);
        if (!id)
            throw ResolutionError("unknown generator '" + name + "' at position " + std::to_string(at));
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            e = exponent();
        }
        const Generator& g = A_.table()[*id];
        if (e < 0 && !g.laurent)
            throw ParseError("negative exponent on '" + name + "'", at);
        if (e < 0)
            return A_.monomial(Monomial::generator(*id, e));
        return A_.power(A_.generator(*id), static_cast<unsigned>(e));
    }

    Element term() {
        Element out = A_.one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            out = A_.scalar(integer());
            if (peek() == '*')
                ++pos_;
            else if (done() || peek() == '+' || peek() == '-')
                return out;
        }
        out = A_.multiply(out, factor());
        while (peek() == '*') {
            ++pos_;
            out = A_.multiply(out, factor());
        }
        return out;
    }

    const GradedAlgebra& A_;
    std::vector<char> chars_;
    std::vector<std::size_t> offsets_;
    std::size_t end_offset_ = 0;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_class(const GradedAlgebra& algebra, std::string_view text) { return Parser(algebra, text).parse(); }

} // namespace thhseg

#include "tdc/expr.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace tdc {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FamilySpec parse() {
        FamilySpec spec = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
        if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string head() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
            ++pos_;
        }
        return out;
    }

    std::uint32_t number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a decimal integer");
        }
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) throw ParseError(start, "integer too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(value);
    }

    template <class Build>
    FamilySpec checked(std::size_t at, Build&& build) {
        try {
            return build();
        } catch (const std::invalid_argument& e) {
            throw ParseError(at, e.what());
        }
    }

    FamilySpec expr() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string name = head();
        if (name.empty()) fail("expected a family name");

        if (name == "corona" || name == "join" || name == "cart") {
            expect('(');
            FamilySpec left = expr();
            expect(',');
            FamilySpec right = expr();
            expect(')');
            if (name == "corona") return FamilySpec::corona(std::move(left), std::move(right));
            if (name == "join") return FamilySpec::join(std::move(left), std::move(right));
            return FamilySpec::cart(std::move(left), std::move(right));
        }

        if (name.size() != 1) throw ParseError(at, "unknown family '" + name + "'");
        const char h = name[0];
        if (h == 'd' || h == 'g') {
            expect('(');
            const std::uint32_t x = number();
            expect(',');
            const std::uint32_t y = number();
            expect(')');
            if (h == 'd') return checked(at, [&] { return FamilySpec::friendship(x, y); });
            return checked(at, [&] { return FamilySpec::grid(x, y); });
        }

        expect('(');
        const std::uint32_t n = number();
        expect(')');
        switch (h) {
        case 'p': return checked(at, [&] { return FamilySpec::path(n); });
        case 'c': return checked(at, [&] { return FamilySpec::cycle(n); });
        case 'k': return checked(at, [&] { return FamilySpec::complete(n); });
        case 'e': return checked(at, [&] { return FamilySpec::empty(n); });
        case 'f': return checked(at, [&] { return FamilySpec::friendship(3, n); });
        case 'l': return checked(at, [&] { return FamilySpec::ladder(n); });
        case 't': return checked(at, [&] { return FamilySpec::tri_chain(n); });
        case 'o': return checked(at, [&] { return FamilySpec::ortho_chain(n); });
        default: throw ParseError(at, "unknown family '" + name + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

FamilySpec parse_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace tdc

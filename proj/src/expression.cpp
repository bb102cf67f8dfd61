#include "casson/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace casson {

AmbientKnot AmbientKnot::in_s3(KnotDescriptor k)
{
    AmbientKnot a;
    a.knot = std::move(k);
    return a;
}

AmbientKnot AmbientKnot::fiber(const BrieskornTriple& t, int index)
{
    if (index < 1 || index > 3)
        throw std::invalid_argument("singular fiber index must be 1, 2 or 3 (got " + std::to_string(index) + ")");
    AmbientKnot a;
    a.ambient = t;
    a.knot = SingularFiber{index};
    return a;
}

std::string AmbientKnot::to_string() const
{
    if (const auto* k = std::get_if<KnotDescriptor>(&knot)) {
        if (in_three_sphere()) return k->to_string();
        return k->to_string() + " in " + std::get<BrieskornTriple>(ambient).to_string();
    }
    const int idx = std::get<SingularFiber>(knot).index;
    if (in_three_sphere()) return "fiber(S3," + std::to_string(idx) + ")";
    return "fiber(" + std::get<BrieskornTriple>(ambient).to_string() + "," + std::to_string(idx) + ")";
}

std::string ManifoldExpression::to_string() const
{
    struct Visitor {
        std::string operator()(const ThreeSphere&) const { return "S3"; }
        std::string operator()(const BrieskornTriple& t) const { return t.to_string(); }
        std::string operator()(const CatalogRef& c) const { return "catalog(" + c.name + ")"; }
        std::string operator()(const Surgery& s) const
        {
            return "surgery(" + std::to_string(s.numerator) + "/" + std::to_string(s.denominator) + ", " +
                   s.knot.to_string() + ")";
        }
        std::string operator()(const Splice& s) const
        {
            return "splice(" + s.side1.to_string() + ", " + s.side2.to_string() + ")";
        }
        std::string operator()(const KSplice& s) const
        {
            return "ksplice(" + std::to_string(s.k) + ", " + s.knot1.to_string() + ", " + s.knot2.to_string() + ")";
        }
    };
    return std::visit(Visitor{}, v_);
}

ManifoldExpression sigma4_demo_expression()
{
    // Sigma(2,3,35) along its order-35 fiber, Sigma(5,6,7) along its order-6 fiber.
    return Splice{AmbientKnot::fiber(BrieskornTriple(2, 3, 35), 3), AmbientKnot::fiber(BrieskornTriple(5, 6, 7), 2)};
}

// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Int, Word, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

bool word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ManifoldExpression expression()
    {
        Token t = peek();
        if (t.kind == Token::Kind::Word) {
            if (t.text == "S3") {
                next();
                return ThreeSphere{};
            }
            if (t.text == "sigma4demo") {
                next();
                return sigma4_demo_expression();
            }
            if (t.text == "brieskorn") return brieskorn();
            if (t.text == "catalog") {
                next();
                expect("(");
                return CatalogRef{raw_name()};
            }
            if (t.text == "surgery") {
                next();
                expect("(");
                Surgery s;
                s.numerator = integer();
                expect("/");
                s.denominator = integer();
                expect(",");
                s.knot = knot();
                expect(")");
                return s;
            }
            if (t.text == "splice") {
                next();
                expect("(");
                Splice s;
                s.side1 = side();
                expect(",");
                s.side2 = side();
                expect(")");
                return s;
            }
            if (t.text == "ksplice") {
                next();
                expect("(");
                KSplice s;
                s.k = integer();
                expect(",");
                s.knot1 = knot();
                expect(",");
                s.knot2 = knot();
                expect(")");
                return s;
            }
        }
        fail(t, {"S3", "brieskorn", "catalog", "surgery", "splice", "ksplice", "sigma4demo"});
    }

    KnotDescriptor knot()
    {
        Token t = peek();
        if (t.kind == Token::Kind::Word) {
            if (t.text == "unknot") {
                next();
                return KnotDescriptor::unknot();
            }
            if (t.text == "torus") {
                next();
                expect("(");
                std::int64_t p = integer();
                expect(",");
                std::int64_t q = integer();
                Token close = peek();
                expect(")");
                return semantic(close, [&] { return KnotDescriptor::torus(p, q); });
            }
            if (t.text == "twist") {
                next();
                expect("(");
                std::int64_t n = integer();
                Token close = peek();
                expect(")");
                return semantic(close, [&] { return KnotDescriptor::twist(n); });
            }
            if (is_knot_identifier(t.text)) {
                next();
                return KnotDescriptor::named(t.text);
            }
        }
        fail(t, {"unknot", "torus", "twist", "<knot name>"});
    }

    void finish()
    {
        Token t = peek();
        if (t.kind != Token::Kind::End) fail(t, {"<end of input>"});
    }

private:
    BrieskornTriple brieskorn()
    {
        next();
        expect("(");
        std::int64_t a = integer();
        expect(",");
        std::int64_t b = integer();
        expect(",");
        std::int64_t c = integer();
        Token close = peek();
        expect(")");
        return semantic(close, [&] { return BrieskornTriple(a, b, c); });
    }

    AmbientKnot side()
    {
        Token t = peek();
        if (t.kind == Token::Kind::Word && t.text == "fiber") {
            next();
            expect("(");
            Token b = peek();
            if (!(b.kind == Token::Kind::Word && b.text == "brieskorn")) fail(b, {"brieskorn"});
            BrieskornTriple triple = brieskorn();
            expect(",");
            Token it = peek();
            std::int64_t idx = integer();
            expect(")");
            return semantic(it, [&] {
                if (idx < 1 || idx > 3)
                    throw std::invalid_argument("singular fiber index must be 1, 2 or 3 (got " + std::to_string(idx) + ")");
                return AmbientKnot::fiber(triple, static_cast<int>(idx));
            });
        }
        if (!(t.kind == Token::Kind::Word &&
              (t.text == "unknot" || t.text == "torus" || t.text == "twist" || is_knot_identifier(t.text))))
            fail(t, {"unknot", "torus", "twist", "<knot name>", "fiber"});
        return AmbientKnot::in_s3(knot());
    }

    // Catalog names may contain balanced parentheses, e.g. Sigma(2,3,5,7).
    std::string raw_name()
    {
        skip_ws();
        int depth = 0;
        std::string name;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) name += c;
            ++pos_;
        }
        if (pos_ >= src_.size()) {
            Token end{Token::Kind::End, "", src_.size()};
            fail(end, {")"});
        }
        if (name.empty()) {
            Token t{Token::Kind::Punct, ")", pos_};
            fail(t, {"<catalog name>"});
        }
        ++pos_;  // closing ')'
        lookahead_.reset();
        return name;
    }

    std::int64_t integer()
    {
        Token t = peek();
        if (t.kind != Token::Kind::Int) fail(t, {"<integer>"});
        next();
        std::int64_t v = 0;
        const char* b = t.text.data();
        const char* e = b + t.text.size();
        if (*b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e)
            throw ParseError(t.pos, {"<integer>"}, "integer out of range at position " + std::to_string(t.pos));
        return v;
    }

    void expect(const char* punct)
    {
        Token t = peek();
        if (t.kind != Token::Kind::Punct || t.text != punct) fail(t, {std::string("'") + punct + "'"});
        next();
    }

    template <class F>
    auto semantic(const Token& at, F&& f) -> decltype(f())
    {
        try {
            return f();
        } catch (const std::invalid_argument& e) {
            throw ParseError(at.pos, {}, std::string(e.what()) + " (at position " + std::to_string(at.pos) + ")");
        }
    }

    [[noreturn]] void fail(const Token& t, std::set<std::string> expected)
    {
        std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        std::string list;
        for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
        throw ParseError(t.pos, expected,
                         "syntax error at position " + std::to_string(t.pos) + ": found " + found +
                             ", expected one of: " + list);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    Token lex()
    {
        skip_ws();
        Token t;
        t.pos = pos_;
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (c == '(' || c == ')' || c == ',' || c == '/') {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, c);
            ++pos_;
            return t;
        }
        std::size_t start = pos_;
        if ((c == '-' || c == '+') && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            t.kind = Token::Kind::Int;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (word_char(c)) {
            bool digits = true;
            while (pos_ < src_.size() && word_char(src_[pos_])) {
                if (!std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits = false;
                ++pos_;
            }
            t.kind = digits ? Token::Kind::Int : Token::Kind::Word;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        t.kind = Token::Kind::Punct;
        t.text = std::string(1, c);
        ++pos_;
        return t;
    }

    Token peek()
    {
        if (!lookahead_) lookahead_ = lex();
        return *lookahead_;
    }

    void next()
    {
        peek();
        lookahead_.reset();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::optional<Token> lookahead_;
};

}  // namespace

ManifoldExpression parse_expression(std::string_view src)
{
    Parser p(src);
    ManifoldExpression e = p.expression();
    p.finish();
    return e;
}

KnotDescriptor parse_knot(std::string_view src)
{
    Parser p(src);
    KnotDescriptor k = p.knot();
    p.finish();
    return k;
}

}  // namespace casson

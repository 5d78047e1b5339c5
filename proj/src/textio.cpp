#include "tropdiff/textio.hpp"

#include "tropdiff/error.hpp"

#include <cctype>
#include <optional>

namespace tropdiff {

void ParseContext::validate() const
{
    if (m == 0 || n == 0)
        throw InvalidInput("parse context needs m >= 1 and n >= 1");
}

namespace {

enum class Tok { Int, Ident, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take()
    {
        Token t = cur_;
        advance();
        return t;
    }

    bool at_sym(char c) const { return cur_.kind == Tok::Sym && cur_.text[0] == c; }
    bool at_ident(std::string_view name) const
    {
        return cur_.kind == Tok::Ident && cur_.text == name;
    }

    void expect_sym(char c)
    {
        if (!at_sym(c))
            fail(std::string("expected '") + c + "'");
        advance();
    }

    void expect_end()
    {
        if (cur_.kind != Tok::End)
            fail("unexpected trailing input '" + cur_.text + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur_.pos); }

    std::size_t offset() const { return cur_.pos; }

private:
    void advance()
    {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        cur_ = Token{};
        cur_.pos = i_;
        if (i_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::Int;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                cur_.text += src_[i_++];
            if (i_ < src_.size() && (src_[i_] == '.' || src_[i_] == 'e' || src_[i_] == 'E'))
                throw ParseError("floating-point literals are not accepted", i_);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            cur_.kind = Tok::Ident;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                cur_.text += src_[i_++];
            return;
        }
        static constexpr std::string_view symbols = "+-*/^()[]{},;";
        if (symbols.find(c) == std::string_view::npos)
            throw ParseError(std::string("unexpected character '") + c + "'", i_);
        cur_.kind = Tok::Sym;
        cur_.text = std::string(1, c);
        ++i_;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token cur_;
};

Point::value_type parse_int_token(Lexer& lx)
{
    if (lx.peek().kind != Tok::Int)
        lx.fail("expected a nonnegative integer");
    const Token t = lx.take();
    if (t.text.size() > 18)
        throw ParseError("integer too large", t.pos);
    return std::stoll(t.text);
}

Point parse_point_tokens(Lexer& lx, std::size_t m)
{
    const std::size_t start = lx.offset();
    lx.expect_sym('(');
    std::vector<Point::value_type> c;
    c.push_back(parse_int_token(lx));
    while (lx.at_sym(',')) {
        lx.take();
        c.push_back(parse_int_token(lx));
    }
    lx.expect_sym(')');
    if (m != 0 && c.size() != m)
        throw ParseError("point has " + std::to_string(c.size()) + " coordinates, expected " +
                             std::to_string(m),
                         start);
    return Point(std::move(c));
}

FinitePointSet parse_point_list(Lexer& lx, std::size_t m)
{
    lx.expect_sym('{');
    std::vector<Point> pts;
    if (!lx.at_sym('}')) {
        pts.push_back(parse_point_tokens(lx, m));
        while (lx.at_sym(',')) {
            lx.take();
            pts.push_back(parse_point_tokens(lx, m));
        }
    }
    lx.expect_sym('}');
    return FinitePointSet(m, std::move(pts));
}

// Index suffix of identifiers like t3 / x12; `bare` is accepted when the
// dimension is 1.
std::optional<std::size_t> indexed_name(const std::string& ident, char head, std::size_t limit)
{
    if (ident.empty() || ident[0] != head)
        return std::nullopt;
    if (ident.size() == 1)
        return limit == 1 ? std::optional<std::size_t>(1) : std::nullopt;
    for (std::size_t k = 1; k < ident.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(ident[k])))
            return std::nullopt;
    if (ident[1] == '0' || ident.size() > 9)
        return std::nullopt;
    return static_cast<std::size_t>(std::stoul(ident.substr(1)));
}

class ExprParser {
public:
    ExprParser(std::string_view text, const ParseContext& ctx) : lx_(text), ctx_(ctx)
    {
        ctx_.validate();
    }

    DiffPolynomial parse_all()
    {
        DiffPolynomial p = expr();
        lx_.expect_end();
        return p;
    }

private:
    DiffPolynomial zero() const { return DiffPolynomial(ctx_.m, ctx_.n, ctx_.field); }

    DiffPolynomial constant(const FieldElement& c) const
    {
        return DiffPolynomial::constant(ctx_.n, PowerSeries::constant(ctx_.m, c));
    }

    DiffPolynomial expr()
    {
        DiffPolynomial acc = zero();
        bool negate = false;
        if (lx_.at_sym('+') || lx_.at_sym('-'))
            negate = lx_.take().text == "-";
        for (;;) {
            DiffPolynomial t = term();
            if (negate)
                acc -= t;
            else
                acc += t;
            if (lx_.at_sym('+') || lx_.at_sym('-'))
                negate = lx_.take().text == "-";
            else
                return acc;
        }
    }

    DiffPolynomial term()
    {
        DiffPolynomial acc = factor();
        while (lx_.at_sym('*')) {
            lx_.take();
            acc = acc * factor();
        }
        return acc;
    }

    DiffPolynomial factor()
    {
        const std::size_t start = lx_.offset();
        DiffPolynomial base = primary();
        if (!lx_.at_sym('^'))
            return base;
        lx_.take();
        const auto e = parse_int_token(lx_);
        if (e > 4096)
            throw ParseError("exponent too large", start);
        DiffPolynomial out = constant(FieldElement(ctx_.field, 1));
        for (Point::value_type k = 0; k < e; ++k)
            out = out * base;
        return out;
    }

    DiffPolynomial primary()
    {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Int)
            return constant(FieldElement(ctx_.field, rational_literal()));
        if (lx_.at_sym('(')) {
            lx_.take();
            DiffPolynomial inner = expr();
            lx_.expect_sym(')');
            return inner;
        }
        if (t.kind != Tok::Ident)
            lx_.fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");

        const Token id = lx_.take();
        if (id.text == "sqrtd") {
            if (ctx_.field.is_rational())
                throw ParseError("sqrtd needs a quadratic field", id.pos);
            return constant(FieldElement(ctx_.field, 0, 1));
        }
        if (id.text == "O") {
            lx_.expect_sym('(');
            const auto n = parse_int_token(lx_);
            lx_.expect_sym(')');
            return DiffPolynomial::constant(
                ctx_.n, PowerSeries(ctx_.m, ctx_.field).truncated(n));
        }
        if (auto k = indexed_name(id.text, 't', ctx_.m)) {
            if (*k > ctx_.m)
                throw ParseError("series variable " + id.text + " exceeds m = " +
                                     std::to_string(ctx_.m),
                                 id.pos);
            return DiffPolynomial::constant(
                ctx_.n, PowerSeries::variable(ctx_.m, ctx_.field, *k - 1));
        }
        if (auto i = indexed_name(id.text, 'x', ctx_.n)) {
            if (*i > ctx_.n)
                throw ParseError("differential variable " + id.text + " exceeds n = " +
                                     std::to_string(ctx_.n),
                                 id.pos);
            lx_.expect_sym('[');
            std::vector<Point::value_type> j;
            j.push_back(parse_int_token(lx_));
            while (lx_.at_sym(',')) {
                lx_.take();
                j.push_back(parse_int_token(lx_));
            }
            lx_.expect_sym(']');
            if (j.size() != ctx_.m)
                throw ParseError("derivative index has " + std::to_string(j.size()) +
                                     " entries, expected " + std::to_string(ctx_.m),
                                 id.pos);
            return DiffPolynomial::derivative(ctx_.m, ctx_.n, ctx_.field,
                                              DerivativeKey{*i, Point(std::move(j))});
        }
        throw ParseError("unknown identifier '" + id.text + "'", id.pos);
    }

    Rational rational_literal()
    {
        const Token num = lx_.take();
        Rational q(mpz_class(num.text), 1);
        if (lx_.at_sym('/') ) {
            lx_.take();
            if (lx_.peek().kind != Tok::Int)
                lx_.fail("expected a denominator");
            const Token den = lx_.take();
            mpz_class d(den.text);
            if (d == 0)
                throw ParseError("zero denominator", den.pos);
            q = Rational(mpz_class(num.text), d);
            q.canonicalize();
        }
        return q;
    }

    Lexer lx_;
    ParseContext ctx_;
};

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

Point parse_point(std::string_view text, std::size_t m)
{
    Lexer lx(text);
    Point p = parse_point_tokens(lx, m);
    lx.expect_end();
    return p;
}

SupportSet parse_support(std::string_view text, const ParseContext& ctx)
{
    ctx.validate();
    Lexer lx(text);
    FinitePointSet explicit_points(ctx.m);
    FinitePointSet cones(ctx.m);
    for (;;) {
        if (lx.at_ident("cone")) {
            lx.take();
            cones = set_union(cones, parse_point_list(lx, ctx.m));
        } else {
            explicit_points = set_union(explicit_points, parse_point_list(lx, ctx.m));
        }
        if (!lx.at_sym('+'))
            break;
        lx.take();
    }
    lx.expect_end();
    return SupportSet::normalize(explicit_points, cones);
}

VertexSet parse_vertex_set(std::string_view text, const ParseContext& ctx)
{
    ctx.validate();
    Lexer lx(text);
    FinitePointSet pts = parse_point_list(lx, ctx.m);
    lx.expect_end();
    return VertexSet(pts);
}

DiffPolynomial parse_diff_poly(std::string_view text, const ParseContext& ctx)
{
    return ExprParser(text, ctx).parse_all();
}

PowerSeries parse_series(std::string_view text, const ParseContext& ctx)
{
    const DiffPolynomial p = parse_diff_poly(text, ctx);
    PowerSeries out(ctx.m, ctx.field);
    for (const auto& [mono, c] : p.terms()) {
        if (!mono.is_constant())
            throw ParseError("differential variables are not allowed in a series", 0);
        out = c;
    }
    return out;
}

TropPolynomial parse_trop_poly(std::string_view text, const ParseContext& ctx)
{
    ctx.validate();
    Lexer lx(text);
    TropPolynomial p(ctx.m, ctx.n);
    if (lx.peek().kind == Tok::Int && lx.peek().text == "0") {
        lx.take();
        lx.expect_end();
        return p;
    }
    for (;;) {
        VertexSet coeff = VertexSet::unit(ctx.m);
        TropMonomial::Exponents exps;
        for (;;) {
            if (lx.at_sym('{')) {
                const std::size_t pos = lx.offset();
                VertexSet c(parse_point_list(lx, ctx.m));
                if (c.empty())
                    throw ParseError("tropical coefficient must be nonempty", pos);
                coeff = odot(coeff, c);
            } else {
                const Token id = lx.peek();
                if (id.kind != Tok::Ident)
                    lx.fail("expected a vertex set or a derivative x_i[...]");
                lx.take();
                auto i = indexed_name(id.text, 'x', ctx.n);
                if (!i || *i > ctx.n)
                    throw ParseError("unknown differential variable '" + id.text + "'", id.pos);
                lx.expect_sym('[');
                std::vector<Point::value_type> j;
                j.push_back(parse_int_token(lx));
                while (lx.at_sym(',')) {
                    lx.take();
                    j.push_back(parse_int_token(lx));
                }
                lx.expect_sym(']');
                if (j.size() != ctx.m)
                    throw ParseError("derivative index has wrong length", id.pos);
                unsigned e = 1;
                if (lx.at_sym('^')) {
                    lx.take();
                    e = static_cast<unsigned>(parse_int_token(lx));
                }
                exps[DerivativeKey{*i, Point(std::move(j))}] += e;
            }
            if (!lx.at_sym('*'))
                break;
            lx.take();
        }
        p.add_term(TropMonomial(std::move(exps)), coeff);
        if (!lx.at_sym('+'))
            break;
        lx.take();
    }
    lx.expect_end();
    return p;
}

DiffSystem parse_system(std::string_view text, const ParseContext& ctx)
{
    std::vector<DiffPolynomial> polys;
    std::size_t line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        try {
            polys.push_back(parse_diff_poly(line, ctx));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
        }
    }
    return DiffSystem(std::move(polys));
}

std::vector<SupportSet> parse_support_tuple(std::string_view text, const ParseContext& ctx)
{
    const auto parts = split(text, ';');
    if (parts.size() != ctx.n)
        throw ParseError("expected " + std::to_string(ctx.n) + " supports separated by ';', got " +
                             std::to_string(parts.size()),
                         0);
    std::vector<SupportSet> out;
    for (const auto& s : parts)
        out.push_back(parse_support(s, ctx));
    return out;
}

std::vector<PowerSeries> parse_series_tuple(std::string_view text, const ParseContext& ctx)
{
    const auto parts = split(text, ';');
    if (parts.size() != ctx.n)
        throw ParseError("expected " + std::to_string(ctx.n) + " series separated by ';', got " +
                             std::to_string(parts.size()),
                         0);
    std::vector<PowerSeries> out;
    for (const auto& s : parts)
        out.push_back(parse_series(s, ctx));
    return out;
}

std::size_t infer_arity(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos)
        return 0;
    const auto close = text.find(')', open);
    if (close == std::string_view::npos)
        return 0;
    std::size_t commas = 0;
    for (auto i = open; i < close; ++i)
        commas += text[i] == ',';
    return commas + 1;
}

// ---------------------------------------------------------------------------
// printing

std::string to_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t k = 0; k < p.arity(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(p[k]);
    }
    return s + ")";
}

std::string to_string(const FinitePointSet& set)
{
    std::string s = "{";
    bool first = true;
    for (const auto& p : set) {
        if (!first)
            s += ',';
        first = false;
        s += to_string(p);
    }
    return s + "}";
}

std::string to_string(const VertexSet& s) { return to_string(s.points()); }

std::string to_string(const SupportSet& s)
{
    if (s.cone_generators().empty())
        return to_string(s.explicit_points());
    const std::string cones = "cone" + to_string(s.cone_generators());
    if (s.explicit_points().empty())
        return cones;
    return to_string(s.explicit_points()) + " + " + cones;
}

namespace {

std::string sqrt_multiple(const Rational& b)
{
    return b == 1 ? std::string("sqrtd") : to_string(b) + "*sqrtd";
}

// Unsigned body of a signed product `c * rest`; `negative` receives the sign
// that was pulled out. `rest` may be empty.
std::string signed_product(const FieldElement& c, const std::string& rest, bool& negative)
{
    const Rational& a = c.rational_part();
    const Rational& b = c.sqrt_part();
    std::string core;
    if (b == 0) {
        negative = a < 0;
        const Rational abs_a = negative ? Rational(-a) : a;
        if (abs_a == 1 && !rest.empty())
            return rest;
        core = to_string(abs_a);
    } else if (a == 0) {
        negative = b < 0;
        core = sqrt_multiple(negative ? Rational(-b) : b);
    } else {
        negative = false;
        core = "(" + to_string(c) + ")";
    }
    return rest.empty() ? core : core + "*" + rest;
}

std::string series_monomial(const Point& e)
{
    std::string s;
    for (std::size_t k = 0; k < e.arity(); ++k) {
        if (e[k] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += "t" + std::to_string(k + 1);
        if (e[k] > 1)
            s += "^" + std::to_string(e[k]);
    }
    return s;
}

template <class Tag>
std::string monomial_string(const BasicMonomial<Tag>& m)
{
    std::string s;
    for (const auto& [key, e] : m) {
        if (!s.empty())
            s += '*';
        s += to_string(key);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

void append_signed(std::string& out, bool negative, const std::string& body)
{
    if (out.empty())
        out = negative ? "-" + body : body;
    else
        out += (negative ? " - " : " + ") + body;
}

} // namespace

std::string to_string(const FieldElement& c)
{
    const Rational& a = c.rational_part();
    const Rational& b = c.sqrt_part();
    if (b == 0)
        return to_string(a);
    if (a == 0)
        return b < 0 ? "-" + sqrt_multiple(Rational(-b)) : sqrt_multiple(b);
    return to_string(a) + (b < 0 ? " - " + sqrt_multiple(Rational(-b)) : " + " + sqrt_multiple(b));
}

std::string to_string(const PowerSeries& s)
{
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        bool negative = false;
        const std::string body = signed_product(c, series_monomial(e), negative);
        append_signed(out, negative, body);
    }
    if (s.precision())
        append_signed(out, false, "O(" + std::to_string(*s.precision()) + ")");
    return out.empty() ? "0" : out;
}

std::string to_string(const DerivativeKey& key)
{
    std::string s = "x" + std::to_string(key.var) + "[";
    for (std::size_t k = 0; k < key.order.arity(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(key.order[k]);
    }
    return s + "]";
}

std::string to_string(const DiffMonomial& m) { return m.is_constant() ? "1" : monomial_string(m); }
std::string to_string(const TropMonomial& m) { return m.is_constant() ? "1" : monomial_string(m); }

std::string to_string(const DiffPolynomial& p)
{
    std::string out;
    for (const auto& [mono, alpha] : p.terms()) {
        if (mono.is_constant()) {
            // The constant monomial sorts first, so its series leads the output.
            out = to_string(alpha);
            continue;
        }
        const std::string xs = monomial_string(mono);
        if (alpha.is_exact() && alpha.terms().size() == 1) {
            const auto& [e, c] = *alpha.terms().begin();
            const std::string ts = series_monomial(e);
            bool negative = false;
            const std::string body = signed_product(c, ts.empty() ? xs : ts + "*" + xs, negative);
            append_signed(out, negative, body);
        } else {
            append_signed(out, false, "(" + to_string(alpha) + ")*" + xs);
        }
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const TropPolynomial& p)
{
    std::string out;
    for (const auto& [mono, coeff] : p.term_map()) {
        std::string body = to_string(coeff);
        if (!mono.is_constant())
            body += "*" + monomial_string(mono);
        append_signed(out, false, body);
    }
    return out.empty() ? "0" : out;
}

} // namespace tropdiff

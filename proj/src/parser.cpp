#include "tropmin/parser.hpp"

#include <cctype>

namespace tropmin {

namespace {

enum class Tok { Number, Var, Plus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    size_t var_index = 0;
    size_t col = 0;
};

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    std::vector<Token> out;

    explicit Lexer(const std::string& str) : s(str) {}

    [[noreturn]] void fail(const std::string& msg, size_t col)
    {
        throw ParseError("col " + std::to_string(col + 1) + ": " + msg);
    }

    bool number_may_start() const
    {
        if (out.empty())
            return true;
        Tok k = out.back().kind;
        return k != Tok::Number && k != Tok::Var && k != Tok::RParen;
    }

    void run()
    {
        while (pos < s.size()) {
            char c = s[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            size_t col = pos;
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '-' && pos + 1 < s.size() &&
                 std::isdigit(static_cast<unsigned char>(s[pos + 1])) &&
                 number_may_start())) {
                size_t start = pos;
                if (c == '-')
                    ++pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                // a fraction slash binds only when written without spaces
                if (pos + 1 < s.size() && s[pos] == '/' &&
                    std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                    ++pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                        ++pos;
                }
                out.push_back({Tok::Number, s.substr(start, pos - start), 0, col});
                continue;
            }
            if (c == 'x' || c == 'y' || c == 'z') {
                size_t idx = static_cast<size_t>(c - 'x');
                ++pos;
                if (c == 'x' && pos < s.size() && s[pos] >= '1' && s[pos] <= '3') {
                    idx = static_cast<size_t>(s[pos] - '1');
                    ++pos;
                }
                out.push_back({Tok::Var, s.substr(col, pos - col), idx, col});
                continue;
            }
            Tok k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '/': k = Tok::Slash; break;
                default: fail(std::string("unexpected character '") + c + "'", col);
            }
            out.push_back({k, std::string(1, c), 0, col});
            ++pos;
        }
        out.push_back({Tok::End, "", 0, s.size()});
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;
    size_t max_var = 0;  // 1 + highest variable index seen
    bool saw_var = false;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }

    [[noreturn]] void fail(const std::string& msg)
    {
        throw ParseError("col " + std::to_string(peek().col + 1) + ": " + msg);
    }

    void expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            fail(std::string("expected ") + what);
        ++at;
    }

    // raw monomial data before the dimension is known
    struct RawMono {
        Rational coeff{0};
        std::vector<std::pair<size_t, Rational>> powers;
    };

    RawMono parse_term()
    {
        RawMono m;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Number) {
                m.coeff += parse_rational(take().text);
            } else if (t.kind == Tok::Var) {
                size_t idx = take().var_index;
                saw_var = true;
                max_var = std::max(max_var, idx + 1);
                Rational e(1);
                if (peek().kind == Tok::Caret) {
                    ++at;
                    if (peek().kind != Tok::Number)
                        fail("expected exponent after '^'");
                    e = parse_rational(take().text);
                }
                m.powers.emplace_back(idx, e);
            } else {
                fail("expected a coefficient or variable");
            }
            if (peek().kind == Tok::Star) {
                ++at;
                continue;
            }
            break;
        }
        return m;
    }

    std::vector<RawMono> parse_signomial_raw()
    {
        std::vector<RawMono> terms;
        terms.push_back(parse_term());
        while (peek().kind == Tok::Plus) {
            ++at;
            terms.push_back(parse_term());
        }
        return terms;
    }

    std::vector<std::vector<RawMono>> parse_factorization_raw()
    {
        std::vector<std::vector<RawMono>> factors;
        if (peek().kind == Tok::LParen) {
            while (true) {
                expect(Tok::LParen, "'('");
                factors.push_back(parse_signomial_raw());
                expect(Tok::RParen, "')'");
                if (peek().kind == Tok::Star && toks[at + 1].kind == Tok::LParen) {
                    ++at;
                    continue;
                }
                break;
            }
        } else {
            factors.push_back(parse_signomial_raw());
        }
        return factors;
    }

    Signomial build(const std::vector<RawMono>& terms, size_t dim)
    {
        std::vector<Monomial> ms;
        for (const auto& t : terms) {
            Monomial m;
            m.coeff = t.coeff;
            m.exps.assign(dim, Rational(0));
            for (const auto& [idx, e] : t.powers) {
                if (idx >= dim)
                    throw ParseError("variable index exceeds dimension");
                m.exps[idx] += e;
            }
            ms.push_back(std::move(m));
        }
        return Signomial(dim, std::move(ms));
    }
};

}  // namespace

Signomial parse_signomial(const std::string& text, std::optional<size_t> dim)
{
    Lexer lex(text);
    lex.run();
    Parser p{std::move(lex.out)};
    auto raw = p.parse_signomial_raw();
    if (p.peek().kind != Tok::End)
        p.fail("trailing input after signomial");
    size_t d = dim.value_or(p.saw_var ? p.max_var : 1);
    return p.build(raw, d);
}

Factorization parse_factorization(const std::string& text, std::optional<size_t> dim)
{
    Lexer lex(text);
    lex.run();
    Parser p{std::move(lex.out)};
    auto raw = p.parse_factorization_raw();
    if (p.peek().kind != Tok::End)
        p.fail("trailing input after factorization");
    size_t d = dim.value_or(p.saw_var ? p.max_var : 1);
    std::vector<Signomial> factors;
    for (const auto& f : raw)
        factors.push_back(p.build(f, d));
    return Factorization(std::move(factors));
}

RationalRep parse_rational_rep(const std::string& text, std::optional<size_t> dim)
{
    Lexer lex(text);
    lex.run();
    Parser p{std::move(lex.out)};
    auto num_raw = p.parse_factorization_raw();
    std::optional<std::vector<std::vector<Parser::RawMono>>> den_raw;
    if (p.peek().kind == Tok::Slash) {
        ++p.at;
        den_raw = p.parse_factorization_raw();
    }
    if (p.peek().kind != Tok::End)
        p.fail("trailing input after rational signomial");
    size_t d = dim.value_or(p.saw_var ? p.max_var : 1);
    auto build_fact = [&](const std::vector<std::vector<Parser::RawMono>>& raw) {
        std::vector<Signomial> fs;
        for (const auto& f : raw)
            fs.push_back(p.build(f, d));
        return Factorization(std::move(fs));
    };
    Factorization num = build_fact(num_raw);
    Factorization den = den_raw
        ? build_fact(*den_raw)
        : Factorization({Signomial(d, {{Rational(0), QVec(d, Rational(0))}})});
    return RationalRep(std::move(num), std::move(den));
}

}  // namespace tropmin

#include "bookcoh/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace bookcoh {

namespace {

struct Token {
    enum Kind { Int, VarT, VarU, GenDt, GenDu, Plus, Minus, Star, Caret, Slash, End };
    Kind kind;
    size_t pos;
    std::string digits;  // Int
    int index = 0;       // VarU / GenDu
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_.pos = pos_;
        tok_.digits.clear();
        tok_.index = 0;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': tok_.kind = Token::Plus; ++pos_; return;
            case '-': tok_.kind = Token::Minus; ++pos_; return;
            case '*': tok_.kind = Token::Star; ++pos_; return;
            case '^': tok_.kind = Token::Caret; ++pos_; return;
            case '/': tok_.kind = Token::Slash; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Int;
            tok_.digits = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (c == 't') {
            tok_.kind = Token::VarT;
            ++pos_;
            return;
        }
        if (c == 'u') {
            ++pos_;
            tok_.kind = Token::VarU;
            tok_.index = lex_index("u");
            return;
        }
        if (c == 'd') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == 't') {
                ++pos_;
                tok_.kind = Token::GenDt;
                return;
            }
            if (pos_ < text_.size() && text_[pos_] == 'u') {
                ++pos_;
                tok_.kind = Token::GenDu;
                tok_.index = lex_index("du");
                return;
            }
            throw ParseError("expected 'dt' or 'du<k>' after 'd'", tok_.pos);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    int lex_index(const char* what) {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(std::string("expected index digits after '") + what + "'", tok_.pos);
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6)
            throw ParseError("index too large", tok_.pos);
        return std::stoi(digits);
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
  public:
    Parser(std::string_view text, int n) : lex_(text), n_(n) {}

    PolyMultivector parse() {
        int sign = 1;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            sign = -1;
        }
        parse_term(sign);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            sign = lex_.take().kind == Token::Plus ? 1 : -1;
            parse_term(sign);
        }
        if (lex_.peek().kind != Token::End)
            throw ParseError("expected '+', '-' or end of input", lex_.peek().pos);
        PolyMultivector out(n_, degree_.value_or(0));
        for (auto& [w, f] : accum_.terms())
            out.add_term(w, f);
        return out;
    }

  private:
    static Integer to_integer(const std::string& digits) { return Integer(digits); }

    int to_exponent(const Token& t) {
        if (t.digits.size() > 4)
            throw ParseError("exponent too large", t.pos);
        return std::stoi(t.digits);
    }

    void check_u_index(int i, size_t pos) {
        if (i < 1 || i > n_ - 1)
            throw std::out_of_range("u-index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n_ - 1) + " at position " +
                                    std::to_string(pos));
    }

    // rational := INT ['/' INT]; only consumed when a '*' follows
    std::optional<Rational> try_rational() {
        if (lex_.peek().kind != Token::Int)
            return std::nullopt;
        Token num = lex_.take();
        if (lex_.peek().kind == Token::Slash) {
            lex_.take();
            if (lex_.peek().kind != Token::Int)
                throw ParseError("expected denominator digits", lex_.peek().pos);
            Token den = lex_.take();
            if (lex_.peek().kind != Token::Star)
                throw ParseError("expected '*' after rational", lex_.peek().pos);
            lex_.take();
            Integer d = to_integer(den.digits);
            if (sgn(d) == 0)
                throw ParseError("zero denominator", den.pos);
            return Rational(to_integer(num.digits), d);
        }
        if (lex_.peek().kind == Token::Star) {
            lex_.take();
            return Rational(to_integer(num.digits), 1);
        }
        // bare INT: the generators token '1', or the zero literal
        if (num.digits == "1") {
            unit_pending_ = true;
            return std::nullopt;
        }
        if (num.digits == "0") {
            zero_pending_ = true;
            return std::nullopt;
        }
        throw ParseError("expected '*' after integer", lex_.peek().pos);
    }

    void parse_term(int sign) {
        unit_pending_ = false;
        zero_pending_ = false;
        Rational coeff(sign);
        if (auto r = try_rational())
            coeff *= *r;
        if (zero_pending_)
            return;  // the literal '0' contributes nothing
        Monomial mono = Monomial::one(n_);
        if (!unit_pending_) {
            // [monomial '*']: factors separated by '*', a generator token ends it
            while (lex_.peek().kind == Token::VarT || lex_.peek().kind == Token::VarU) {
                parse_factor(mono);
                if (lex_.peek().kind != Token::Star)
                    throw ParseError("expected '*' before generators", lex_.peek().pos);
                lex_.take();
            }
        }
        parse_generators(coeff, mono);
    }

    void parse_factor(Monomial& mono) {
        Token v = lex_.take();
        int exp = 1;
        if (lex_.peek().kind == Token::Caret) {
            // '^' INT is a power; '^' generator belongs to the wedge
            lex_.take();
            if (lex_.peek().kind != Token::Int)
                throw ParseError("expected integer exponent", lex_.peek().pos);
            exp = to_exponent(lex_.take());
        }
        if (v.kind == Token::VarT) {
            mono.t_exp += exp;
        } else {
            check_u_index(v.index, v.pos);
            mono.u_exps[v.index - 1] += exp;
        }
    }

    void parse_generators(const Rational& coeff, const Monomial& mono) {
        std::vector<int> word;  // 0 = dt, i = du_i, in written order
        if (unit_pending_) {
            // the bare '1' was already consumed by try_rational
        } else if (lex_.peek().kind == Token::Int) {
            Token t = lex_.take();
            if (t.digits != "1")
                throw ParseError("expected generators or '1'", t.pos);
        } else {
            if (lex_.peek().kind != Token::GenDt && lex_.peek().kind != Token::GenDu)
                throw ParseError("expected generators", lex_.peek().pos);
            word.push_back(take_generator());
            while (lex_.peek().kind == Token::Caret) {
                lex_.take();
                word.push_back(take_generator());
            }
        }
        add_parsed_term(coeff, mono, word);
    }

    int take_generator() {
        Token t = lex_.take();
        if (t.kind == Token::GenDt)
            return 0;
        if (t.kind == Token::GenDu) {
            check_u_index(t.index, t.pos);
            return t.index;
        }
        throw ParseError("expected 'dt' or 'du<k>'", t.pos);
    }

    void add_parsed_term(const Rational& coeff, const Monomial& mono,
                         const std::vector<int>& word) {
        int k = static_cast<int>(word.size());
        if (degree_ && *degree_ != k)
            throw std::invalid_argument("mixed degrees: term of degree " + std::to_string(k) +
                                        " in an expression of degree " +
                                        std::to_string(*degree_));
        degree_ = k;

        // normalize to dt-first ascending order; repeated generators vanish
        int inversions = 0;
        for (size_t i = 0; i < word.size(); ++i)
            for (size_t j = i + 1; j < word.size(); ++j) {
                if (word[i] == word[j])
                    return;
                if (word[i] > word[j])
                    ++inversions;
            }
        bool dt = false;
        std::vector<int> j_entries;
        for (int g : word) {
            if (g == 0)
                dt = true;
            else
                j_entries.push_back(g);
        }
        std::sort(j_entries.begin(), j_entries.end());
        Rational c = coeff * Rational(inversions % 2 == 0 ? 1 : -1);
        accum_.add_term(GeneratorWord{dt, IncreasingIndex(std::move(j_entries))},
                        Polynomial(n_, mono, c));
    }

    // accumulates terms of any degree while parsing; rebuilt with the final
    // degree at the end
    struct Accumulator {
        explicit Accumulator(int n) : n_(n) {}
        void add_term(const GeneratorWord& w, const Polynomial& f) {
            if (f.is_zero())
                return;
            auto [it, inserted] = terms_.emplace(w, f);
            if (!inserted) {
                it->second += f;
                if (it->second.is_zero())
                    terms_.erase(it);
            }
        }
        std::map<GeneratorWord, Polynomial>& terms() { return terms_; }
        int n_;
        std::map<GeneratorWord, Polynomial> terms_;
    };

    Lexer lex_;
    int n_;
    std::optional<int> degree_;
    bool unit_pending_ = false;
    bool zero_pending_ = false;
    Accumulator accum_{0};
};

}  // namespace

PolyMultivector parse_multivector(std::string_view text, int n) {
    if (n < 2)
        throw std::out_of_range("parse_multivector: ambient dimension must be >= 2");
    Parser parser(text, n);
    return parser.parse();
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    auto factor = [&s](const std::string& var, int e) {
        if (e == 0)
            return;
        if (!s.empty())
            s += '*';
        s += var;
        if (e > 1)
            s += "^" + std::to_string(e);
    };
    factor("t", m.t_exp);
    for (size_t i = 0; i < m.u_exps.size(); ++i)
        factor("u" + std::to_string(i + 1), m.u_exps[i]);
    return s;
}

std::string generators_str(const GeneratorWord& w) {
    if (w.degree() == 0)
        return "1";
    std::string s;
    if (w.dt)
        s = "dt";
    for (int j : w.J.entries()) {
        if (!s.empty())
            s += '^';
        s += "du" + std::to_string(j);
    }
    return s;
}

}  // namespace

std::string format_multivector(const PolyMultivector& mu) {
    if (mu.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, f] : mu.terms()) {
        const std::string gens = generators_str(w);
        for (const auto& [m, c] : f.terms()) {
            const bool negative = c.sign() < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational mag = negative ? -c : c;
            std::string term;
            if (!mag.is_one())
                term += mag.str() + "*";
            const std::string mono = monomial_str(m);
            if (!mono.empty())
                term += mono + "*";
            term += gens;
            out += term;
        }
    }
    return out;
}

}  // namespace bookcoh

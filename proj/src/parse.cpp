#include "parse.hpp"

#include <cctype>
#include <string>

namespace torclus::detail {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RawExpr run() {
        RawExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
    bool uses_x_ = false;
    bool uses_y_ = false;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    int64_t integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        skip();
        const size_t start = pos_;
        int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return neg ? -v : v;
    }

    // n or n/2, returned doubled.
    int64_t fraction() {
        const int64_t n = integer();
        if (accept('/')) {
            if (integer() != 2) fail("only halves are allowed as exponents");
            return n;
        }
        return checked_mul(n, 2);
    }

    int64_t exponent_doubled() {
        if (!accept('^')) return 2;
        if (accept('{')) {
            const int64_t v = fraction();
            expect('}');
            return v;
        }
        return fraction();
    }

    bool starts_factor() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'Y' || c == 'X' || c == 'P' || c == '(';
    }

    RawExpr expr() {
        RawExpr out;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        while (true) {
            RawTerm t = product();
            if (neg) t.coef = -t.coef;
            out.terms.push_back(std::move(t));
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else break;
        }
        out.uses_x = uses_x_;
        out.uses_y = uses_y_;
        return out;
    }

    RawTerm product() {
        RawTerm t{ParamLaurent(1), {}};
        factor(t);
        while (true) {
            if (accept('*')) {
                factor(t);
            } else if (starts_factor()) {
                factor(t);
            } else {
                break;
            }
        }
        return t;
    }

    void mul_coef(RawTerm& t, const ParamLaurent& c) { t.coef = pl_mul(t.coef, c, QuotientContext::none()); }

    void factor(RawTerm& t) {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mul_coef(t, ParamLaurent(integer()));
            return;
        }
        if (accept_word("PER")) {
            expect('(');
            const int64_t a0 = integer();
            expect(',');
            const int64_t P = integer();
            expect(')');
            expect('[');
            std::vector<int64_t> pat;
            do {
                if (accept('{')) {
                    pat.push_back(fraction());
                    expect('}');
                } else {
                    pat.push_back(fraction());
                }
            } while (accept(','));
            expect(']');
            if (P <= 0 || static_cast<int64_t>(pat.size()) != P) fail("PER pattern length does not match its period");
            mul_coef(t, ParamLaurent(ParamMonomial(ExpSeq::periodic(a0, {}, pat))));
            return;
        }
        if (accept('t')) {
            expect('[');
            const int64_t a = integer();
            expect(']');
            mul_coef(t, ParamLaurent(ParamMonomial::t(a, exponent_doubled())));
            return;
        }
        if (accept('Y') || (peek() == 'X' && accept('X'))) {
            const bool is_x = s_[pos_ - 1] == 'X';
            expect('[');
            const int64_t i = integer();
            int64_t r = 0;
            if (!is_x) {
                expect(',');
                r = integer();
            }
            expect(']');
            const int64_t d = exponent_doubled();
            if (d % 2 != 0) fail("variable exponents must be integers");
            (is_x ? uses_x_ : uses_y_) = true;
            auto& slot = t.y[{i, r}];
            slot = checked_add(slot, d / 2);
            if (slot == 0) t.y.erase({i, r});
            return;
        }
        if (accept('(')) {
            RawExpr inner = expr();
            expect(')');
            ParamLaurent sum;
            for (auto& it : inner.terms) {
                if (!it.y.empty()) fail("parenthesized groups must not contain variables");
                sum += it.coef;
            }
            if (accept('^')) {
                int64_t k;
                if (accept('{')) {
                    k = integer();
                    expect('}');
                } else {
                    k = integer();
                }
                sum = pl_pow(sum, k, QuotientContext::none());
            }
            mul_coef(t, sum);
            return;
        }
        fail("expected a factor");
    }
};

}  // namespace

RawExpr parse_raw(std::string_view text) { return Parser(text).run(); }

}  // namespace torclus::detail

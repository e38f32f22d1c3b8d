#include "torclus/params.hpp"

#include <algorithm>
#include <numeric>

#include "parse.hpp"

namespace torclus {

const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivergentSpecialization: return "DivergentSpecialization";
        case ErrorKind::NotQuasiCommuting: return "NotQuasiCommuting";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::OddExponent: return "OddExponent";
        case ErrorKind::Truncated: return "Truncated";
        case ErrorKind::NotIDominant: return "NotIDominant";
        case ErrorKind::NotThin: return "NotThin";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::AmbiguousSupport: return "AmbiguousSupport";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::UnknownType: return "UnknownType";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

// ---------------------------------------------------------------- ExpSeq

ExpSeq ExpSeq::finite(int64_t a_min, std::vector<int64_t> doubled) {
    ExpSeq e;
    e.a_min_ = a_min;
    e.explicit_ = std::move(doubled);
    e.canonicalize();
    return e;
}

ExpSeq ExpSeq::periodic(int64_t a_min, std::vector<int64_t> explicit_values, std::vector<int64_t> pattern) {
    ExpSeq e;
    e.a_min_ = a_min;
    e.explicit_ = std::move(explicit_values);
    e.pattern_ = std::move(pattern);
    e.canonicalize();
    return e;
}

ExpSeq ExpSeq::unit(int64_t a, int64_t doubled) { return finite(a, {doubled}); }

int64_t ExpSeq::at(int64_t a) const {
    if (a < a_min_) return 0;
    const auto off = static_cast<uint64_t>(a - a_min_);
    if (off < explicit_.size()) return explicit_[off];
    if (pattern_.empty()) return 0;
    return pattern_[(off - explicit_.size()) % pattern_.size()];
}

void ExpSeq::canonicalize() {
    if (!pattern_.empty()) {
        const size_t P = pattern_.size();
        for (size_t d = 1; d <= P; ++d) {
            if (P % d != 0) continue;
            bool ok = true;
            for (size_t i = d; i < P && ok; ++i) ok = pattern_[i] == pattern_[i - d];
            if (ok) {
                pattern_.resize(d);
                break;
            }
        }
        if (std::all_of(pattern_.begin(), pattern_.end(), [](int64_t v) { return v == 0; })) pattern_.clear();
    }
    if (pattern_.empty()) {
        while (!explicit_.empty() && explicit_.back() == 0) explicit_.pop_back();
    } else {
        while (!explicit_.empty() && explicit_.back() == pattern_.back()) {
            explicit_.pop_back();
            std::rotate(pattern_.begin(), pattern_.end() - 1, pattern_.end());
        }
    }
    size_t z = 0;
    while (z < explicit_.size() && explicit_[z] == 0) ++z;
    explicit_.erase(explicit_.begin(), explicit_.begin() + static_cast<std::ptrdiff_t>(z));
    a_min_ += static_cast<int64_t>(z);
    if (explicit_.empty()) {
        if (pattern_.empty()) {
            a_min_ = 0;
        } else {
            size_t f = 0;
            while (pattern_[f] == 0) ++f;
            a_min_ += static_cast<int64_t>(f);
            std::rotate(pattern_.begin(), pattern_.begin() + static_cast<std::ptrdiff_t>(f), pattern_.end());
        }
    }
}

namespace {

template <class F>
ExpSeq combine(const ExpSeq& x, const ExpSeq& y, F f) {
    int64_t lo;
    if (x.is_zero()) lo = y.a_min();
    else if (y.is_zero()) lo = x.a_min();
    else lo = std::min(x.a_min(), y.a_min());
    const int64_t hi = std::max(x.is_zero() ? lo : x.a_tail(), y.is_zero() ? lo : y.a_tail());
    int64_t P = 0;
    if (x.has_tail() && y.has_tail()) P = std::lcm(x.period(), y.period());
    else if (x.has_tail()) P = x.period();
    else if (y.has_tail()) P = y.period();
    std::vector<int64_t> ex;
    ex.reserve(static_cast<size_t>(hi - lo));
    for (int64_t a = lo; a < hi; ++a) ex.push_back(f(x.at(a), y.at(a)));
    std::vector<int64_t> pat;
    for (int64_t a = hi; a < hi + P; ++a) pat.push_back(f(x.at(a), y.at(a)));
    return ExpSeq::periodic(lo, std::move(ex), std::move(pat));
}

}  // namespace

ExpSeq ExpSeq::operator+(const ExpSeq& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    return combine(*this, o, [](int64_t a, int64_t b) { return checked_add(a, b); });
}

ExpSeq ExpSeq::operator-(const ExpSeq& o) const {
    if (o.is_zero()) return *this;
    return combine(*this, o, [](int64_t a, int64_t b) { return checked_add(a, -b); });
}

ExpSeq ExpSeq::operator-() const { return scaled(-1); }

ExpSeq ExpSeq::scaled(int64_t k) const {
    if (k == 0 || is_zero()) return {};
    ExpSeq e = *this;
    for (auto& v : e.explicit_) v = checked_mul(v, k);
    for (auto& v : e.pattern_) v = checked_mul(v, k);
    if (k == -1 || k == 1) return e;
    e.canonicalize();
    return e;
}

ExpSeq ExpSeq::halved() const {
    ExpSeq e = *this;
    for (auto* vec : {&e.explicit_, &e.pattern_}) {
        for (auto& v : *vec) {
            if (v % 2 != 0) throw Error(ErrorKind::OddExponent, "cannot halve exponent " + exponent_text(v));
            v /= 2;
        }
    }
    return e;
}

ExpSeq ExpSeq::projected(const std::vector<int64_t>& keep) const {
    if (keep.empty() || is_zero()) return {};
    const auto [lo, hi] = std::minmax_element(keep.begin(), keep.end());
    std::vector<int64_t> v(static_cast<size_t>(*hi - *lo + 1), 0);
    for (int64_t a : keep) v[static_cast<size_t>(a - *lo)] = at(a);
    return finite(*lo, std::move(v));
}

int ExpSeq::compare(const ExpSeq& x, const ExpSeq& y) {
    if (x == y) return 0;
    const int64_t lo = std::min(x.a_min(), y.a_min());
    int64_t hi = std::max(x.a_tail(), y.a_tail());
    if (x.has_tail() && y.has_tail()) hi += std::lcm(x.period(), y.period());
    else hi += std::max(x.period(), y.period());
    for (int64_t a = lo; a < hi; ++a) {
        const int64_t vx = x.at(a), vy = y.at(a);
        if (vx != vy) return vx < vy ? -1 : 1;
    }
    return 0;
}

std::string exponent_text(int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

// ---------------------------------------------------------------- ParamMonomial

std::string ParamMonomial::str() const {
    if (is_one()) return "1";
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += ' ';
    };
    for (int64_t a = e_.a_min(); a < e_.a_tail(); ++a) {
        const int64_t v = e_.at(a);
        if (v == 0) continue;
        sep();
        out += "t[" + std::to_string(a) + "]";
        if (v != 2) out += "^{" + exponent_text(v) + "}";
    }
    if (e_.has_tail()) {
        sep();
        out += "*PER(" + std::to_string(e_.a_tail()) + "," + std::to_string(e_.period()) + ")[";
        for (size_t i = 0; i < e_.pattern().size(); ++i) {
            if (i) out += ',';
            out += exponent_text(e_.pattern()[i]);
        }
        out += ']';
    }
    return out;
}

int64_t pm_specialize(const ParamMonomial& m, const SpecializationWeights& w) {
    const ExpSeq& e = m.exps();
    if (e.has_tail() && w.default_weight != 0)
        throw Error(ErrorKind::DivergentSpecialization, "periodic tail meets a nonzero default weight");
    auto weight = [&](int64_t a) {
        auto it = w.weights.find(a);
        return it == w.weights.end() ? w.default_weight : it->second;
    };
    int64_t total = 0;
    for (int64_t a = e.a_min(); a < e.a_tail(); ++a) total = checked_add(total, checked_mul(weight(a), e.at(a)));
    for (const auto& [a, wa] : w.weights) {
        if (a >= e.a_tail()) total = checked_add(total, checked_mul(wa, e.at(a)));
    }
    return total;
}

// ---------------------------------------------------------------- QuotientContext

QuotientContext QuotientContext::standard() {
    QuotientContext q;
    q.kind_ = Kind::Standard;
    return q;
}

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

ExpSeq seq_from_map(const std::map<int64_t, int64_t>& m) {
    if (m.empty()) return {};
    const int64_t lo = m.begin()->first, hi = m.rbegin()->first;
    std::vector<int64_t> v(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [a, x] : m) v[static_cast<size_t>(a - lo)] = x;
    return ExpSeq::finite(lo, std::move(v));
}

}  // namespace

QuotientContext QuotientContext::custom(const std::vector<ParamMonomial>& relations) {
    QuotientContext q;
    q.kind_ = Kind::Custom;
    q.relations_ = relations;
    std::vector<std::map<int64_t, int64_t>> pending;
    for (const auto& r : relations) {
        const ExpSeq& e = r.exps();
        if (e.has_tail()) throw Error(ErrorKind::ParseError, "quotient relations must be finitely supported");
        std::map<int64_t, int64_t> row;
        for (int64_t a = e.a_min(); a < e.a_tail(); ++a)
            if (e.at(a) != 0) row[a] = e.at(a);
        if (!row.empty()) pending.push_back(std::move(row));
    }
    // Integer row echelon form with pivots at the lowest index.
    while (!pending.empty()) {
        int64_t pivot = pending.front().begin()->first;
        for (const auto& r : pending) pivot = std::min(pivot, r.begin()->first);
        std::vector<std::map<int64_t, int64_t>> with, without;
        for (auto& r : pending) (r.begin()->first == pivot ? with : without).push_back(std::move(r));
        while (with.size() > 1) {
            std::sort(with.begin(), with.end(), [&](const auto& a, const auto& b) {
                return std::llabs(a.at(pivot)) < std::llabs(b.at(pivot));
            });
            const auto& base = with.front();
            const int64_t bp = base.at(pivot);
            std::vector<std::map<int64_t, int64_t>> next{base};
            for (size_t i = 1; i < with.size(); ++i) {
                auto r = with[i];
                const int64_t f = r.at(pivot) / bp;
                for (const auto& [a, x] : base) {
                    r[a] = checked_add(r[a], -checked_mul(f, x));
                    if (r[a] == 0) r.erase(a);
                }
                if (r.empty()) continue;
                (r.begin()->first == pivot ? next : without).push_back(std::move(r));
            }
            with = std::move(next);
        }
        auto row = std::move(with.front());
        if (row.at(pivot) < 0)
            for (auto& [a, x] : row) x = -x;
        q.rows_.emplace_back(pivot, std::move(row));
        pending = std::move(without);
    }
    return q;
}

ParamMonomial QuotientContext::reduce(const ParamMonomial& m) const {
    if (kind_ == Kind::None || m.is_one()) return m;
    const ExpSeq& e = m.exps();
    if (kind_ == Kind::Standard) {
        // Move every t_{-2k}, k >= 2, onto the pair t_{-2}, t_2 using t_{-2k}t_{2k} ~ t_{-2}t_2.
        std::map<int64_t, int64_t> adj;
        for (int64_t a = e.a_min(); a <= -4; ++a) {
            if (a % 2 != 0) continue;
            const int64_t x = e.at(a);
            if (x == 0) continue;
            adj[a] -= x;
            adj[-a] -= x;
            adj[-2] += x;
            adj[2] += x;
        }
        if (adj.empty()) return m;
        return ParamMonomial(e + seq_from_map(adj));
    }
    ExpSeq cur = e;
    for (const auto& [pivot, row] : rows_) {
        const int64_t q = floor_div(cur.at(pivot), row.at(pivot));
        if (q != 0) cur = cur - seq_from_map(row).scaled(q);
    }
    return ParamMonomial(cur);
}

bool QuotientContext::in_lattice(const ParamMonomial& d) const {
    const ExpSeq& e = d.exps();
    switch (kind_) {
        case Kind::None: return e.is_zero();
        case Kind::Custom: return reduce(d).is_one();
        case Kind::Standard: {
            if (e.has_tail()) return false;
            if (e.at(0) != 0) return false;
            int64_t sum = 0;
            const int64_t bound = std::max(std::llabs(e.a_min()), std::llabs(e.a_tail())) + 1;
            for (int64_t a = 1; a <= bound; ++a) {
                if (a % 2 != 0) {
                    if (e.at(a) != 0 || e.at(-a) != 0) return false;
                    continue;
                }
                if (e.at(a) != e.at(-a)) return false;
                sum += e.at(a);
            }
            return sum == 0;
        }
    }
    return false;
}

std::string QuotientContext::str() const {
    switch (kind_) {
        case Kind::None: return "none";
        case Kind::Standard: return "standard";
        case Kind::Custom: {
            std::string out = "custom[";
            for (size_t i = 0; i < relations_.size(); ++i) out += (i ? "; " : "") + relations_[i].str();
            return out + "]";
        }
    }
    return "?";
}

// ---------------------------------------------------------------- ParamLaurent

ParamLaurent::ParamLaurent(int64_t c) {
    if (c != 0) terms_.emplace(ParamMonomial(), c);
}

ParamLaurent::ParamLaurent(const ParamMonomial& m, int64_t c) {
    if (c != 0) terms_.emplace(m, c);
}

bool ParamLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool ParamLaurent::is_unit_monomial() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

void ParamLaurent::add_term(const ParamMonomial& m, int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

ParamLaurent& ParamLaurent::operator+=(const ParamLaurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamLaurent ParamLaurent::operator+(const ParamLaurent& o) const {
    ParamLaurent r = *this;
    r += o;
    return r;
}

ParamLaurent ParamLaurent::operator-() const { return scaled(-1); }

ParamLaurent ParamLaurent::operator-(const ParamLaurent& o) const { return *this + o.scaled(-1); }

ParamLaurent ParamLaurent::scaled(int64_t c) const {
    ParamLaurent r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, checked_mul(x, c));
    return r;
}

ParamLaurent ParamLaurent::times(const ParamMonomial& m, const QuotientContext& ctx) const {
    ParamLaurent r;
    for (const auto& [k, c] : terms_) r.add_term(ctx.reduce(k * m), c);
    return r;
}

ParamLaurent ParamLaurent::reduced(const QuotientContext& ctx) const {
    if (ctx.kind() == QuotientContext::Kind::None) return *this;
    ParamLaurent r;
    for (const auto& [k, c] : terms_) r.add_term(ctx.reduce(k), c);
    return r;
}

ParamLaurent ParamLaurent::bar() const {
    ParamLaurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k.inverse(), c);
    return r;
}

bool ParamLaurent::is_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

int64_t ParamLaurent::value_at_one() const {
    int64_t s = 0;
    for (const auto& [k, c] : terms_) s = checked_add(s, c);
    return s;
}

std::string ParamLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string body;
        const int64_t a = c < 0 ? -c : c;
        if (m.is_one()) body = std::to_string(a);
        else if (a == 1) body = m.str();
        else body = std::to_string(a) + " " + m.str();
        if (first) out += (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

ParamLaurent pl_mul(const ParamLaurent& x, const ParamLaurent& y, const QuotientContext& ctx) {
    ParamLaurent r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r += ParamLaurent(ctx.reduce(mx * my), checked_mul(cx, cy));
    return r;
}

ParamLaurent pl_divide(const ParamLaurent& x, const ParamLaurent& y, const QuotientContext& ctx) {
    if (y.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
    if (x.is_zero()) return {};
    if (y.size() == 1) {
        const auto& [my, cy] = *y.terms().begin();
        const ParamMonomial inv = my.inverse();
        ParamLaurent r;
        for (const auto& [mx, cx] : x.terms()) {
            if (cx % cy != 0) throw Error(ErrorKind::NotDivisible, "coefficient " + std::to_string(cx) + " by " + std::to_string(cy));
            r += ParamLaurent(ctx.reduce(mx * inv), cx / cy);
        }
        return r;
    }
    // x = q y forces every monomial of q to lie between low(x)/low(y) and lead(x)/lead(y).
    const ParamMonomial floor_m = ctx.reduce(x.terms().begin()->first * y.terms().begin()->first.inverse());
    const ParamMonomial lead_inv = y.lead().inverse();
    ParamLaurent q, r = x;
    for (int iter = 0; !r.is_zero(); ++iter) {
        if (iter > 100000) throw Error(ErrorKind::NotDivisible, "parameter division does not terminate");
        const int64_t c = r.lead_coef();
        if (c % y.lead_coef() != 0) throw Error(ErrorKind::NotDivisible, x.str() + " by " + y.str());
        const ParamMonomial m = ctx.reduce(r.lead() * lead_inv);
        if (m < floor_m) throw Error(ErrorKind::NotDivisible, x.str() + " by " + y.str());
        const ParamLaurent term(m, c / y.lead_coef());
        q += term;
        r = r - pl_mul(term, y, ctx);
    }
    return q;
}

ParamLaurent pl_pow(const ParamLaurent& x, int64_t k, const QuotientContext& ctx) {
    if (k < 0) {
        if (!x.is_unit_monomial()) throw Error(ErrorKind::NotDivisible, "negative power of " + x.str());
        const auto& [m, c] = *x.terms().begin();
        return ParamLaurent(ctx.reduce(m.pow(k)), (k % 2 != 0) ? c : 1);
    }
    ParamLaurent r(1);
    for (int64_t i = 0; i < k; ++i) r = pl_mul(r, x, ctx);
    return r;
}

ParamMonomial parse_param_monomial(std::string_view text) {
    const ParamLaurent p = parse_param_laurent(text);
    if (p.size() != 1 || p.terms().begin()->second != 1)
        throw Error(ErrorKind::ParseError, "expected a single parameter monomial: " + std::string(text));
    return p.terms().begin()->first;
}

ParamLaurent parse_param_laurent(std::string_view text) {
    const detail::RawExpr e = detail::parse_raw(text);
    ParamLaurent r;
    for (const auto& t : e.terms) {
        if (!t.y.empty()) throw Error(ErrorKind::ParseError, "unexpected variable in parameter expression");
        r += t.coef;
    }
    return r;
}

}  // namespace torclus

#include "torclus/torus.hpp"

#include <algorithm>

#include "parse.hpp"

namespace torclus {

// ---------------------------------------------------------------- YMonomial

YMonomial YMonomial::var(int i, int64_t r, int64_t e) {
    YMonomial m;
    if (e != 0) m.e_.push_back({YVariable{i, r}, e});
    return m;
}

YMonomial YMonomial::from_map(const std::map<YVariable, int64_t>& mp) {
    YMonomial m;
    for (const auto& [v, e] : mp)
        if (e != 0) m.e_.push_back({v, e});
    return m;
}

int64_t YMonomial::exponent(const YVariable& v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v, [](const auto& p, const YVariable& x) { return p.first < x; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

bool YMonomial::is_dominant() const {
    return std::all_of(e_.begin(), e_.end(), [](const auto& p) { return p.second > 0; });
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial m;
    m.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            m.e_.push_back(e_[i++]);
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            m.e_.push_back(o.e_[j++]);
        } else {
            const int64_t s = checked_add(e_[i].second, o.e_[j].second);
            if (s != 0) m.e_.push_back({e_[i].first, s});
            ++i;
            ++j;
        }
    }
    return m;
}

YMonomial YMonomial::inverse() const { return pow(-1); }

YMonomial YMonomial::pow(int64_t k) const {
    YMonomial m;
    if (k == 0) return m;
    m.e_ = e_;
    for (auto& p : m.e_) p.second = checked_mul(p.second, k);
    return m;
}

bool YMonomial::operator<(const YMonomial& o) const {
    auto i = e_.rbegin(), j = o.e_.rbegin();
    while (true) {
        const bool hi = i != e_.rend(), hj = j != o.e_.rend();
        if (!hi && !hj) return false;
        if (hi && (!hj || j->first < i->first)) return i->second < 0;
        if (hj && (!hi || i->first < j->first)) return j->second > 0;
        if (i->second != j->second) return i->second < j->second;
        ++i;
        ++j;
    }
}

// ---------------------------------------------------------------- backends

ParamMonomial TorusBackend::pairing(const YMonomial& m1, const YMonomial& m2) const {
    ExpSeq total;
    for (const auto& [a, ua] : m1.exps())
        for (const auto& [b, ub] : m2.exps()) {
            const ParamMonomial p = pairing(a, b);
            if (!p.is_one()) total = total + p.exps().scaled(checked_mul(ua, ub));
        }
    return ParamMonomial(total);
}

FiniteBackend::FiniteBackend(int n, std::vector<int64_t> params, std::vector<IntMatrix> lambdas, QuotientContext q)
    : n_(n), params_(std::move(params)), lambdas_(std::move(lambdas)) {
    quotient_ = std::move(q);
    if (params_.size() != lambdas_.size()) throw Error(ErrorKind::ParseError, "one matrix per parameter is required");
    for (const auto& L : lambdas_) {
        if (static_cast<int>(L.size()) != n_) throw Error(ErrorKind::ParseError, "quasi-commutation matrix has the wrong size");
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(L[i].size()) != n_) throw Error(ErrorKind::ParseError, "quasi-commutation matrix has the wrong size");
            for (int j = 0; j < n_; ++j)
                if (L[i][j] != -L[j][i]) throw Error(ErrorKind::ParseError, "quasi-commutation matrix is not skew-symmetric");
        }
    }
}

ParamMonomial FiniteBackend::pairing(const YVariable& a, const YVariable& b) const {
    if (a.i < 1 || a.i > n_ || b.i < 1 || b.i > n_ || a.r != 0 || b.r != 0)
        throw Error(ErrorKind::ParseError, "generator outside the finite torus");
    ExpSeq total;
    for (size_t k = 0; k < params_.size(); ++k) {
        const int64_t v = lambdas_[k][a.i - 1][b.i - 1];
        if (v != 0) total = total + ExpSeq::unit(params_[k], 2 * v);
    }
    return ParamMonomial(total);
}

std::string FiniteBackend::describe() const {
    std::string s = "finite(n=" + std::to_string(n_) + ", params=";
    for (size_t k = 0; k < params_.size(); ++k) s += (k ? "," : "") + std::to_string(params_[k]);
    return s + ", quotient=" + quotient_.str() + ")";
}

CartanBackend::CartanBackend(CartanPtr data, QuotientContext q, std::optional<std::vector<int64_t>> keep)
    : data_(std::move(data)), keep_(std::move(keep)) {
    quotient_ = std::move(q);
}

ParamMonomial CartanBackend::pairing(const YVariable& a, const YVariable& b) const {
    if (a.i < 1 || a.i > data_->rank() || b.i < 1 || b.i > data_->rank())
        throw Error(ErrorKind::ParseError, "node outside the Dynkin diagram");
    const auto key = std::make_tuple(a.i, b.i, b.r - a.r);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    ParamMonomial p(n_sequence(*data_, a.i, 0, b.i, b.r - a.r));
    if (keep_) p = p.projected(*keep_);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, p);
    return p;
}

std::string CartanBackend::describe() const {
    std::string s = "cartan(" + data_->label() + ", quotient=" + quotient_.str();
    if (keep_) {
        s += ", keep=";
        for (size_t k = 0; k < keep_->size(); ++k) s += (k ? "," : "") + std::to_string((*keep_)[k]);
    }
    return s + ")";
}

BackendPtr make_finite_backend(int n, std::vector<int64_t> params, std::vector<IntMatrix> lambdas, QuotientContext q) {
    return std::make_shared<FiniteBackend>(n, std::move(params), std::move(lambdas), std::move(q));
}

BackendPtr make_cartan_backend(CartanPtr data, QuotientContext q, std::optional<std::vector<int64_t>> keep) {
    return std::make_shared<CartanBackend>(std::move(data), std::move(q), std::move(keep));
}

// ---------------------------------------------------------------- TorusElement

TorusElement::TorusElement(BackendPtr b, const YMonomial& m, const ParamLaurent& c) : backend_(std::move(b)) {
    add_term(m, c);
}

void TorusElement::add_term(const YMonomial& m, const ParamLaurent& c) {
    if (c.is_zero()) return;
    const ParamLaurent rc = backend_ ? c.reduced(backend_->quotient()) : c;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!rc.is_zero()) terms_.emplace(m, rc);
        return;
    }
    it->second += rc;
    if (it->second.is_zero()) terms_.erase(it);
}

ParamLaurent TorusElement::coefficient(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamLaurent() : it->second;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (!backend_) backend_ = o.backend_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement r = *this;
    r += o;
    return r;
}

TorusElement TorusElement::operator-() const { return times(ParamLaurent(-1)); }

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::times(const ParamLaurent& c) const {
    static const QuotientContext none;
    TorusElement r(backend_);
    const QuotientContext& q = backend_ ? backend_->quotient() : none;
    for (const auto& [m, x] : terms_) r.add_term(m, pl_mul(x, c, q));
    return r;
}

std::string ymonomial_text(const YMonomial& m, bool finite) {
    if (m.is_one()) return "1";
    // Printed in (i, r) order, which reads better than the term order.
    auto vars = m.exps();
    std::sort(vars.begin(), vars.end(), [](const auto& x, const auto& y) { return std::tie(x.first.i, x.first.r) < std::tie(y.first.i, y.first.r); });
    std::string s;
    for (const auto& [v, e] : vars) {
        if (!s.empty()) s += ' ';
        s += finite ? "X[" + std::to_string(v.i) + "]" : "Y[" + std::to_string(v.i) + "," + std::to_string(v.r) + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    const bool fin = backend_ && backend_->finite();
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string t;
        const std::string mono = ymonomial_text(m, fin);
        if (c.size() == 1) {
            const auto& [pm, k] = *c.terms().begin();
            std::string coef;
            if (pm.is_one()) coef = std::to_string(k);
            else if (k == 1) coef = pm.str();
            else if (k == -1) coef = "-" + pm.str();
            else coef = std::to_string(k) + " " + pm.str();
            if (m.is_one()) t = coef;
            else if (coef == "1") t = mono;
            else if (coef == "-1") t = "-" + mono;
            else t = coef + " * " + mono;
        } else {
            t = "(" + c.str() + ")";
            if (!m.is_one()) t += " * " + mono;
        }
        if (first) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
        first = false;
    }
    return out;
}

TorusElement parse_element(const BackendPtr& b, std::string_view text) {
    const detail::RawExpr e = detail::parse_raw(text);
    if (b->finite() && e.uses_y) throw Error(ErrorKind::ParseError, "Y variables used with a finite backend");
    if (!b->finite() && e.uses_x) throw Error(ErrorKind::ParseError, "X variables used with a Cartan backend");
    TorusElement out(b);
    for (const auto& t : e.terms) {
        std::map<YVariable, int64_t> mp;
        for (const auto& [k, v] : t.y) mp[YVariable{static_cast<int>(k.first), k.second}] = v;
        const YMonomial m = YMonomial::from_map(mp);
        for (const auto& [v, x] : m.exps()) {
            // validates the variable against the backend
            (void)b->pairing(v, v);
        }
        out += TorusElement(b, m, t.coef);
    }
    return out;
}

// ---------------------------------------------------------------- products

TorusElement rebase(const TorusElement& x, const BackendPtr& b) {
    TorusElement out(b);
    for (const auto& [m, c] : x.terms()) out += TorusElement(b, m, c);
    return out;
}

TorusElement star(const TorusElement& x, const TorusElement& y) {
    const BackendPtr& b = x.backend() ? x.backend() : y.backend();
    TorusElement r(b);
    if (!b) return r;
    const QuotientContext& q = b->quotient();
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            const ParamMonomial twist = b->pairing(mx, my).sqrt();
            r += TorusElement(b, mx * my, pl_mul(cx, cy, q).times(twist, q));
        }
    return r;
}

TorusElement star_pow(const TorusElement& x, int64_t k) {
    TorusElement base = x;
    if (k < 0) {
        // Only c * M with c = +-t^e is invertible; M and M^-1 commute, so no twist appears.
        if (x.terms().size() != 1 || !x.terms().begin()->second.is_unit_monomial())
            throw Error(ErrorKind::NotDivisible, "negative star power of a non-unit");
        const auto& [m, c] = *x.terms().begin();
        const auto& [pm, sign] = *c.terms().begin();
        base = TorusElement(x.backend(), m.inverse(), ParamLaurent(pm.inverse(), sign));
        k = -k;
    }
    TorusElement r = TorusElement::one(x.backend());
    for (int64_t i = 0; i < k; ++i) r = star(r, base);
    return r;
}

TorusElement star_all(const std::vector<TorusElement>& xs, const BackendPtr& b) {
    TorusElement r = TorusElement::one(b);
    for (const auto& x : xs) r = star(r, x);
    return r;
}

TorusElement bar(const TorusElement& x) {
    TorusElement r(x.backend());
    for (const auto& [m, c] : x.terms()) r += TorusElement(x.backend(), m, c.bar());
    return r;
}

ParamMonomial commutator_factor(const TorusElement& x, const TorusElement& y) {
    const BackendPtr& b = x.backend();
    if (x.is_zero() || y.is_zero()) throw Error(ErrorKind::NotQuasiCommuting, "zero element");
    const ParamMonomial c = b->quotient().reduce(b->pairing(x.lead(), y.lead()));
    const TorusElement xy = star(x, y);
    const TorusElement yx = star(y, x).times(c);
    if (!(xy == yx)) throw Error(ErrorKind::NotQuasiCommuting, x.str() + " and " + y.str());
    return c;
}

namespace {

TorusElement exact_divide(const TorusElement& x, const TorusElement& d, bool right) {
    if (d.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
    const BackendPtr& b = d.backend();
    const QuotientContext& q = b->quotient();
    TorusElement quo(b);
    if (x.is_zero()) return quo;
    const YMonomial ld = d.lead();
    const YMonomial ld_inv = ld.inverse();
    const YMonomial floor_m = x.last() * d.last().inverse();
    TorusElement rem = x;
    for (int iter = 0; !rem.is_zero(); ++iter) {
        if (iter > 200000) throw Error(ErrorKind::NotDivisible, "division does not terminate");
        const YMonomial M = rem.lead() * ld_inv;
        if (M < floor_m) throw Error(ErrorKind::NotDivisible, x.str() + " by " + d.str());
        const ParamMonomial twist = (right ? b->pairing(M, ld) : b->pairing(ld, M)).sqrt();
        const ParamLaurent coef = pl_divide(rem.lead_coef(), d.lead_coef().times(twist, q), q);
        const TorusElement T(b, M, coef);
        quo += T;
        rem = rem - (right ? star(T, d) : star(d, T));
    }
    return quo;
}

}  // namespace

TorusElement exact_divide_right(const TorusElement& x, const TorusElement& d) { return exact_divide(x, d, true); }

TorusElement exact_divide_left(const TorusElement& x, const TorusElement& d) { return exact_divide(x, d, false); }

TorusElement truncate(const TorusElement& x, const std::set<YVariable>& allowed) {
    TorusElement r(x.backend());
    for (const auto& [m, c] : x.terms()) {
        const bool ok = std::all_of(m.exps().begin(), m.exps().end(), [&](const auto& p) { return allowed.count(p.first) > 0; });
        if (ok) r += TorusElement(x.backend(), m, c);
    }
    return r;
}

// ---------------------------------------------------------------- A-monomials and weights

std::vector<std::tuple<int, int64_t, int64_t>> a_exponents(const CartanData& data, int i, int64_t r) {
    std::vector<std::tuple<int, int64_t, int64_t>> out{{i, r - data.d(i), 1}, {i, r + data.d(i), 1}};
    for (int k = 1; k <= data.rank(); ++k) {
        if (k == i) continue;
        const int64_t c = data.C(k, i);
        if (c == -1) out.emplace_back(k, r, -1);
        else if (c == -2) {
            out.emplace_back(k, r - 1, -1);
            out.emplace_back(k, r + 1, -1);
        }
    }
    return out;
}

YMonomial a_ymonomial(const CartanData& data, int i, int64_t r) {
    std::map<YVariable, int64_t> mp;
    for (const auto& [j, s, e] : a_exponents(data, i, r)) mp[YVariable{j, s}] += e;
    return YMonomial::from_map(mp);
}

TorusElement a_monomial(const BackendPtr& b, int i, int64_t r) {
    const auto* cb = dynamic_cast<const CartanBackend*>(b.get());
    if (!cb) throw Error(ErrorKind::UnknownType, "A-monomials need a Cartan backend");
    return TorusElement(b, a_ymonomial(cb->cartan(), i, r));
}

std::vector<int64_t> weight(const CartanData& data, const YMonomial& m) {
    std::vector<int64_t> w(static_cast<size_t>(data.rank()), 0);
    for (const auto& [v, e] : m.exps()) w[v.i - 1] += e;
    return w;
}

std::vector<YMonomial> dominant_monomials(const TorusElement& x) {
    std::vector<YMonomial> out;
    for (const auto& [m, c] : x.terms())
        if (m.is_dominant()) out.push_back(m);
    return out;
}

bool nakajima_leq(const YMonomial& m, const YMonomial& m2, const CartanData& data) {
    YMonomial T = m2 * m.inverse();
    if (T.is_one()) return true;
    const int64_t top = T.exps().back().first.r;
    // The lowest variable of T is the lowest factor of exactly one A_{i,r}; peel it off.
    while (!T.is_one()) {
        const auto [v, e] = T.exps().front();
        if (e < 0) return false;
        const int64_t r = v.r + data.d(v.i);
        if (r + data.d(v.i) > top) return false;
        T = T * a_ymonomial(data, v.i, r).pow(-e);
    }
    return true;
}

std::map<YMonomial, int64_t> specialize_at_one(const TorusElement& x) {
    std::map<YMonomial, int64_t> out;
    for (const auto& [m, c] : x.terms()) {
        const int64_t v = c.value_at_one();
        if (v != 0) out[m] = v;
    }
    return out;
}

TorusElement specialize_params(const TorusElement& x, const BackendPtr& target, const std::vector<SpecializationWeights>& weights,
                               const std::vector<int64_t>& target_params) {
    TorusElement out(target);
    for (const auto& [m, c] : x.terms()) {
        ParamLaurent nc;
        for (const auto& [pm, k] : c.terms()) {
            ExpSeq e;
            for (size_t j = 0; j < weights.size(); ++j) {
                const int64_t v = pm_specialize(pm, weights[j]);
                if (v != 0) e = e + ExpSeq::unit(target_params[j], v);
            }
            nc += ParamLaurent(ParamMonomial(e), k);
        }
        out += TorusElement(target, m, nc);
    }
    return out;
}

}  // namespace torclus

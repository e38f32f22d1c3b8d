#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "torclus/cartan.hpp"
#include "torclus/params.hpp"

namespace torclus {

// Y_{i,r}; generators X_i of a finite torus are stored as (i, 0).
struct YVariable {
    int i = 0;
    int64_t r = 0;

    bool operator==(const YVariable&) const = default;
    bool operator<(const YVariable& o) const { return std::tie(r, i) < std::tie(o.r, o.i); }
};

class YMonomial {
public:
    using Exps = std::vector<std::pair<YVariable, int64_t>>;

    YMonomial() = default;
    static YMonomial var(int i, int64_t r, int64_t e = 1);
    static YMonomial from_map(const std::map<YVariable, int64_t>& m);

    const Exps& exps() const { return e_; }
    int64_t exponent(const YVariable& v) const;
    bool is_one() const { return e_.empty(); }
    bool is_dominant() const;

    YMonomial operator*(const YMonomial& o) const;
    YMonomial inverse() const;
    YMonomial pow(int64_t k) const;

    bool operator==(const YMonomial&) const = default;
    // Term order: compare exponents from the highest variable in (r, i) order downwards.
    // A group order, so leading terms multiply.
    bool operator<(const YMonomial& o) const;

private:
    Exps e_;  // sorted by variable, no zero exponents
};

class TorusBackend {
public:
    virtual ~TorusBackend() = default;

    // Exponents of c in Y_a * Y_b = c Y_b * Y_a.
    virtual ParamMonomial pairing(const YVariable& a, const YVariable& b) const = 0;
    virtual bool finite() const = 0;
    virtual std::string describe() const = 0;

    const QuotientContext& quotient() const { return quotient_; }

    // sum_{a in m1, b in m2} u_a u_b pairing(a, b)
    ParamMonomial pairing(const YMonomial& m1, const YMonomial& m2) const;

protected:
    QuotientContext quotient_;
};

using BackendPtr = std::shared_ptr<const TorusBackend>;

// Generators X_1..X_n with X_i * X_j = prod_a t_a^{Lambda_a(i,j)} X_j * X_i.
class FiniteBackend : public TorusBackend {
public:
    FiniteBackend(int n, std::vector<int64_t> params, std::vector<IntMatrix> lambdas, QuotientContext q = {});

    ParamMonomial pairing(const YVariable& a, const YVariable& b) const override;
    bool finite() const override { return true; }
    std::string describe() const override;

    int size() const { return n_; }
    const std::vector<int64_t>& params() const { return params_; }
    const std::vector<IntMatrix>& lambdas() const { return lambdas_; }

private:
    int n_;
    std::vector<int64_t> params_;
    std::vector<IntMatrix> lambdas_;
};

// Y_{i,p} * Y_{j,s} = prod_a t_a^{N_a(i,p;j,s)} Y_{j,s} * Y_{i,p}, optionally projected to finitely many t_a.
class CartanBackend : public TorusBackend {
public:
    CartanBackend(CartanPtr data, QuotientContext q = {}, std::optional<std::vector<int64_t>> keep = {});

    ParamMonomial pairing(const YVariable& a, const YVariable& b) const override;
    bool finite() const override { return false; }
    std::string describe() const override;

    const CartanData& cartan() const { return *data_; }
    const CartanPtr& cartan_ptr() const { return data_; }
    const std::optional<std::vector<int64_t>>& keep() const { return keep_; }

private:
    CartanPtr data_;
    std::optional<std::vector<int64_t>> keep_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int64_t>, ParamMonomial> cache_;
};

BackendPtr make_finite_backend(int n, std::vector<int64_t> params, std::vector<IntMatrix> lambdas, QuotientContext q = {});
BackendPtr make_cartan_backend(CartanPtr data, QuotientContext q = {}, std::optional<std::vector<int64_t>> keep = {});

// Sum of ParamLaurent coefficients times commutative monomials.
class TorusElement {
public:
    using Terms = std::map<YMonomial, ParamLaurent>;

    TorusElement() = default;
    explicit TorusElement(BackendPtr b) : backend_(std::move(b)) {}
    TorusElement(BackendPtr b, const YMonomial& m, const ParamLaurent& c = ParamLaurent(1));

    static TorusElement one(BackendPtr b) { return TorusElement(std::move(b), YMonomial()); }
    static TorusElement scalar(BackendPtr b, const ParamLaurent& c) { return TorusElement(std::move(b), YMonomial(), c); }
    static TorusElement y(BackendPtr b, int i, int64_t r, int64_t e = 1) { return TorusElement(std::move(b), YMonomial::var(i, r, e)); }

    const BackendPtr& backend() const { return backend_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    ParamLaurent coefficient(const YMonomial& m) const;
    const YMonomial& lead() const { return terms_.rbegin()->first; }
    const ParamLaurent& lead_coef() const { return terms_.rbegin()->second; }
    const YMonomial& last() const { return terms_.begin()->first; }
    // The element is c * m for a parameter monomial c and a Y-monomial m.
    bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second.size() == 1; }

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement times(const ParamLaurent& c) const;
    TorusElement times(const ParamMonomial& m) const { return times(ParamLaurent(m)); }

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    BackendPtr backend_;
    Terms terms_;

    void add_term(const YMonomial& m, const ParamLaurent& c);
};

// Same terms over another backend, coefficients reduced by its quotient.
TorusElement rebase(const TorusElement& x, const BackendPtr& b);
TorusElement star(const TorusElement& x, const TorusElement& y);
TorusElement star_pow(const TorusElement& x, int64_t k);
// Ordered product x_1 * x_2 * ... * x_k.
TorusElement star_all(const std::vector<TorusElement>& xs, const BackendPtr& b);
TorusElement bar(const TorusElement& x);
// c with x * y = c (y * x); NotQuasiCommuting otherwise.
ParamMonomial commutator_factor(const TorusElement& x, const TorusElement& y);
// q with q * d = x.
TorusElement exact_divide_right(const TorusElement& x, const TorusElement& d);
// q with d * q = x.
TorusElement exact_divide_left(const TorusElement& x, const TorusElement& d);
TorusElement truncate(const TorusElement& x, const std::set<YVariable>& allowed);

// Exponents (j, s, e) of A_{i,r}.
std::vector<std::tuple<int, int64_t, int64_t>> a_exponents(const CartanData& data, int i, int64_t r);
YMonomial a_ymonomial(const CartanData& data, int i, int64_t r);
TorusElement a_monomial(const BackendPtr& b, int i, int64_t r);
// Weight in the basis of fundamental weights.
std::vector<int64_t> weight(const CartanData& data, const YMonomial& m);

std::vector<YMonomial> dominant_monomials(const TorusElement& x);
// m <= m2 in the Nakajima order: m2 m^{-1} is a product of A_{i,r} with nonnegative exponents.
bool nakajima_leq(const YMonomial& m, const YMonomial& m2, const CartanData& data);

// Coefficients evaluated at t_a = 1.
std::map<YMonomial, int64_t> specialize_at_one(const TorusElement& x);
// Re-express x over a finite backend with one parameter per weight map (t_a -> prod_k s_k^{w_k(a)}).
TorusElement specialize_params(const TorusElement& x, const BackendPtr& target, const std::vector<SpecializationWeights>& weights,
                               const std::vector<int64_t>& target_params);

std::string ymonomial_text(const YMonomial& m, bool finite);
TorusElement parse_element(const BackendPtr& b, std::string_view text);

}  // namespace torclus

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torclus/errors.hpp"

namespace torclus {

// Eventually periodic integer sequence indexed by Z, stored with doubled values:
// the exponent of t_a is at(a) / 2.
class ExpSeq {
public:
    ExpSeq() = default;

    static ExpSeq finite(int64_t a_min, std::vector<int64_t> doubled);
    // Values for a >= a_min + explicit.size() repeat `pattern`.
    static ExpSeq periodic(int64_t a_min, std::vector<int64_t> explicit_values, std::vector<int64_t> pattern);
    static ExpSeq unit(int64_t a, int64_t doubled);

    int64_t at(int64_t a) const;
    bool is_zero() const { return explicit_.empty() && pattern_.empty(); }
    bool has_tail() const { return !pattern_.empty(); }

    int64_t a_min() const { return a_min_; }
    int64_t a_tail() const { return a_min_ + static_cast<int64_t>(explicit_.size()); }
    int64_t period() const { return static_cast<int64_t>(pattern_.size()); }
    const std::vector<int64_t>& explicit_values() const { return explicit_; }
    const std::vector<int64_t>& pattern() const { return pattern_; }

    // Past this index nothing new happens: every later value repeats one in [a_tail, horizon).
    int64_t horizon() const { return a_tail() + period(); }

    ExpSeq operator+(const ExpSeq& o) const;
    ExpSeq operator-(const ExpSeq& o) const;
    ExpSeq operator-() const;
    ExpSeq scaled(int64_t k) const;
    // Divides every stored value by two; OddExponent if some value is odd.
    ExpSeq halved() const;
    // Drops everything outside `keep`.
    ExpSeq projected(const std::vector<int64_t>& keep) const;

    bool operator==(const ExpSeq& o) const = default;

    // Lexicographic from the lowest index; a total order compatible with addition.
    static int compare(const ExpSeq& x, const ExpSeq& y);

private:
    int64_t a_min_ = 0;
    std::vector<int64_t> explicit_;
    std::vector<int64_t> pattern_;

    void canonicalize();
};

class ParamMonomial {
public:
    ParamMonomial() = default;
    explicit ParamMonomial(ExpSeq e) : e_(std::move(e)) {}

    // t_a^{doubled/2}
    static ParamMonomial t(int64_t a, int64_t doubled = 2) { return ParamMonomial(ExpSeq::unit(a, doubled)); }

    const ExpSeq& exps() const { return e_; }
    bool is_one() const { return e_.is_zero(); }

    ParamMonomial operator*(const ParamMonomial& o) const { return ParamMonomial(e_ + o.e_); }
    ParamMonomial inverse() const { return ParamMonomial(-e_); }
    ParamMonomial pow(int64_t k) const { return ParamMonomial(e_.scaled(k)); }
    ParamMonomial sqrt() const { return ParamMonomial(e_.halved()); }
    ParamMonomial projected(const std::vector<int64_t>& keep) const { return ParamMonomial(e_.projected(keep)); }

    bool operator==(const ParamMonomial& o) const = default;
    bool operator<(const ParamMonomial& o) const { return ExpSeq::compare(e_, o.e_) < 0; }

    std::string str() const;

private:
    ExpSeq e_;
};

// Specialization weights: finitely many explicit weights plus a default for every other index.
struct SpecializationWeights {
    std::map<int64_t, int64_t> weights;
    int64_t default_weight = 0;
};

// Returns the doubled exponent c of t^{c/2}.
int64_t pm_specialize(const ParamMonomial& m, const SpecializationWeights& w);

class QuotientContext {
public:
    enum class Kind { None, Standard, Custom };

    QuotientContext() = default;
    static QuotientContext none() { return {}; }
    static QuotientContext standard();
    static QuotientContext custom(const std::vector<ParamMonomial>& relations);

    Kind kind() const { return kind_; }
    const std::vector<ParamMonomial>& relations() const { return relations_; }

    // Canonical representative of the class of m.
    ParamMonomial reduce(const ParamMonomial& m) const;
    bool in_lattice(const ParamMonomial& d) const;
    bool equal(const ParamMonomial& a, const ParamMonomial& b) const { return in_lattice(a * b.inverse()); }

    std::string str() const;

private:
    Kind kind_ = Kind::None;
    std::vector<ParamMonomial> relations_;
    // Echelon basis of the custom relation lattice: pivot index, then the row.
    std::vector<std::pair<int64_t, std::map<int64_t, int64_t>>> rows_;
};

class ParamLaurent {
public:
    using Terms = std::map<ParamMonomial, int64_t>;

    ParamLaurent() = default;
    ParamLaurent(int64_t c);  // NOLINT: integers are constants
    ParamLaurent(const ParamMonomial& m, int64_t c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t size() const { return terms_.size(); }
    // Single term with coefficient +-1.
    bool is_unit_monomial() const;
    const ParamMonomial& lead() const { return terms_.rbegin()->first; }
    int64_t lead_coef() const { return terms_.rbegin()->second; }

    ParamLaurent operator+(const ParamLaurent& o) const;
    ParamLaurent operator-(const ParamLaurent& o) const;
    ParamLaurent operator-() const;
    ParamLaurent& operator+=(const ParamLaurent& o);
    ParamLaurent times(const ParamMonomial& m, const QuotientContext& ctx) const;
    ParamLaurent scaled(int64_t c) const;

    ParamLaurent reduced(const QuotientContext& ctx) const;
    ParamLaurent bar() const;
    bool is_positive() const;
    int64_t value_at_one() const;

    bool operator==(const ParamLaurent& o) const = default;

    std::string str() const;

private:
    Terms terms_;

    void add_term(const ParamMonomial& m, int64_t c);
};

ParamLaurent pl_mul(const ParamLaurent& x, const ParamLaurent& y, const QuotientContext& ctx);
// Exact quotient x / y; NotDivisible if y does not divide x.
ParamLaurent pl_divide(const ParamLaurent& x, const ParamLaurent& y, const QuotientContext& ctx);
ParamLaurent pl_pow(const ParamLaurent& x, int64_t k, const QuotientContext& ctx);

// Exponent text: "3", "-1/2".
std::string exponent_text(int64_t doubled);

ParamMonomial parse_param_monomial(std::string_view text);
ParamLaurent parse_param_laurent(std::string_view text);

}  // namespace torclus

#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "torclus/cluster.hpp"

namespace torclus {

struct Assertion {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
};

class Report {
public:
    explicit Report(std::string name = {}) : name_(std::move(name)) {}

    void check(const std::string& id, bool ok, const std::string& detail = {});
    void equal(const std::string& id, const std::string& expected, const std::string& actual);
    void equal(const std::string& id, const TorusElement& expected, const TorusElement& actual);
    void equal(const std::string& id, const ParamMonomial& expected, const ParamMonomial& actual, const QuotientContext& ctx);
    // Runs f and records a failed assertion if it throws.
    void guard(const std::string& id, const std::function<void()>& f);
    void merge(const Report& other);

    const std::string& name() const { return name_; }
    const std::vector<Assertion>& items() const { return items_; }
    bool ok() const;
    size_t failures() const;
    std::string text() const;

private:
    std::string name_;
    std::vector<Assertion> items_;
};

// ---------------------------------------------------------------- categories

struct HeightFunction {
    std::vector<int64_t> xi;  // xi[i - 1] for node i

    int64_t operator()(int i) const { return xi[static_cast<size_t>(i - 1)]; }
    bool is_bipartite(const CartanData& data) const;
};

// Bipartite height function with node 1 at 0.
HeightFunction bipartite_height(const CartanData& data);

enum class Category { CZ, C1, C1ob, CQExample, B2QFlat };

struct CategoryProfile {
    Category name = Category::CZ;
    CartanPtr cartan;
    HeightFunction xi;
    std::set<YVariable> generators;  // empty: no truncation
    QuotientContext quotient;
    std::optional<std::vector<int64_t>> keep;

    BackendPtr backend() const;
};

CategoryProfile profile_cz(CartanPtr data);
CategoryProfile profile_c1(CartanPtr data, const HeightFunction& xi);
CategoryProfile profile_c1_ob(CartanPtr data);  // type A, xi_i = i
CategoryProfile profile_cq_sl3();
CategoryProfile profile_b2_qflat();
// The single relation of the B2 quotient.
ParamMonomial b2_relation();

// ---------------------------------------------------------------- classes

// Ordered star product over ascending r of (Y_{i,r} + Y_{i,r} A_{i,r+1}^{-1})^{u_{i,r}} Y_{j,r}^{u_{j,r}}.
TorusElement e_block(const BackendPtr& b, int i, const YMonomial& m);

struct EBlockCheck {
    TorusElement defect;  // LHS - t^alpha * reversed, in the quotient under test
    bool holds = false;
};

// Commutator of two E-block generators at distance 2k.
// NONE quotient: defect equals the two-term formula. STANDARD: zero for k > 1, a polynomial in
// Y_{i,r} A_{i,r+1}^{-1} Y_{i,r+2} for k = 1.
EBlockCheck e_block_commutator(const CartanPtr& data, const QuotientContext& q, int i, int64_t r, int k);
bool verify_e_block_quotient(const CartanPtr& data, int i, int64_t r, int k);
bool verify_e_block_formula(const CartanPtr& data, int i, int64_t r, int k);

// Classical q-character of the simple module with highest monomial `top`, for modules whose
// j-strings are all KR strings (fundamentals of type A and B2, KR modules of type A).
std::map<YMonomial, int64_t> q_character_thin(const CartanData& data, const YMonomial& top);
// Sum of commutative monomials with coefficient 1.
TorusElement fundamental_class_thin(const BackendPtr& b, int i, int64_t r);
TorusElement class_from_character(const BackendPtr& b, const std::map<YMonomial, int64_t>& chi);

enum class C1Label { Top, KR, Bottom };  // L(Y_{i,xi+2}), L(Y_{i,xi} Y_{i,xi+2}), L(Y_{i,xi})

TorusElement truncated_class_C1(const BackendPtr& b, const HeightFunction& xi, C1Label label, int i);
// Y_{i,0} prod_{j~i} Y_{j,3} (1 + A_{i,1}^{-1})
TorusElement minimal_affinization_C1(const BackendPtr& b, int i);

ToroidalSeed build_c1_seed(CartanPtr data, const HeightFunction& xi);
// Lambda_a of the C1 seed from the three-case N formula, independent of the torus.
IntMatrix c1_lambda(const CartanData& data, const HeightFunction& xi, int64_t a);
Report verify_c1_theorem(CartanPtr data, const HeightFunction& xi);

// ---------------------------------------------------------------- sl2

TorusElement kr_class_sl2(const BackendPtr& b, int k, int64_t p);
// s = t_{-2}^{1/2} t_2^{1/2}
ParamMonomial sl2_s();
bool tsystem_sl2(const BackendPtr& b, int k, int64_t p);
bool kr_recursion_sl2(const BackendPtr& b, int l, int64_t p);
Report sl2_report();

// ---------------------------------------------------------------- corpora

Report two_param_serre_check();
Report sl3_cq_corpus();
Report sl3_cq_simples();
Report ay_check(CartanPtr data, int samples, uint64_t seed = 20190503);
Report power_products_check();
Report b2_corpus();
Report a2_c1ob_graph();
Report cartan_tables_check();

// The two-parameter seed (X_1, X_2, X_3) over parameters t_1, t_2.
ToroidalSeed two_param_seed();
// t_1 and t_2 of the sl3 reparametrization.
std::pair<ParamMonomial, ParamMonomial> sl3_reparametrization(const CartanData& data);

// Coefficients c_j with lhs = sum_j c_j rhs_j, found by peeling terms with private monomials.
std::vector<ParamLaurent> fit_identity(const TorusElement& lhs, const std::vector<TorusElement>& rhs);

std::vector<std::string> verify_ids();
Report run_verify(const std::string& id);

}  // namespace torclus

#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "torclus/torus.hpp"

namespace torclus {

using QMatrix = std::vector<std::vector<ParamMonomial>>;

// Exchangeable variables come first. B is n x m; Q[i][j] is the commutation factor of variables i and j.
// Directions k are 0-based in this API.
struct ToroidalSeed {
    BackendPtr backend;
    std::vector<TorusElement> vars;
    int m = 0;
    IntMatrix B;
    QMatrix Q;

    int n() const { return static_cast<int>(vars.size()); }
};

// Computes Q from the variables.
ToroidalSeed make_seed(BackendPtr backend, std::vector<TorusElement> vars, IntMatrix B, int m);
QMatrix compute_Q(const std::vector<TorusElement>& vars);

struct CompatibilityReport {
    bool ok = true;
    // prod_i Q[i][k]^{B_ik} for each exchangeable k.
    std::vector<ParamMonomial> diagonal;
    // (k, j, monomial) with j != k and a nontrivial monomial.
    std::vector<std::tuple<int, int, ParamMonomial>> residues;
    // Per tracked parameter (or per basis element when a basis is given): diagonal exponents, doubled.
    std::map<int64_t, std::vector<int64_t>> per_parameter;
    std::vector<std::string> failures;

    std::string str() const;
};

// With a basis, diagonals are rewritten as products of basis monomials and signs are checked per basis element.
CompatibilityReport check_compatibility(const ToroidalSeed& seed, const std::vector<ParamMonomial>& basis = {});

// Doubled exponents x with m = prod_i basis_i^{x_i / 2} modulo ctx, if they exist.
std::optional<std::vector<int64_t>> express_in_basis(const ParamMonomial& m, const std::vector<ParamMonomial>& basis,
                                                     const QuotientContext& ctx);

IntMatrix mutate_B(const IntMatrix& B, int k);
IntMatrix mutate_Lambda(const IntMatrix& L, int k, const IntMatrix& B);
QMatrix mutate_Q(const QMatrix& Q, int k, const IntMatrix& B, const QuotientContext& ctx);
IntMatrix B_times_Lambda(const IntMatrix& B, const IntMatrix& L);  // B^T L

// u pairs with the monomial of positive entries in column k, v with the negative ones:
// Y_k' * Y_k = u M_+ + v M_-.
std::pair<ParamMonomial, ParamMonomial> mutation_uv(const ToroidalSeed& seed, int k);
// Bar-invariant monomial prod_i Y_i^{u_i} in the seed's variables (u_i >= 0).
TorusElement cluster_monomial(const ToroidalSeed& seed, const std::vector<int64_t>& u);
// The pair (u M_+, v M_-).
std::pair<TorusElement, TorusElement> exchange_terms(const ToroidalSeed& seed, int k);
ToroidalSeed mutate_seed(const ToroidalSeed& seed, int k);
ToroidalSeed mutate_word(const ToroidalSeed& seed, const std::vector<int>& word);

// Exchangeable variables sorted by their text; returns the permutation used (new position -> old index).
ToroidalSeed canonical_seed(const ToroidalSeed& seed, std::vector<int>* perm = nullptr);
std::string seed_key(const ToroidalSeed& canonical);

struct ExchangeGraph {
    std::vector<ToroidalSeed> nodes;
    std::vector<std::tuple<size_t, int, size_t>> edges;  // (node, direction, node), one per unordered pair
    bool finite = false;

    std::string dot() const;
    std::string summary() const;
};

// Truncated when more than max_nodes seeds appear, unless allow_partial.
ExchangeGraph exchange_graph(const ToroidalSeed& seed, size_t max_nodes, int jobs = 1, bool allow_partial = false);

struct LaurentReport {
    // exponent vector over the initial variables -> coefficient
    std::map<std::vector<int64_t>, ParamLaurent> coefficients;
    bool positive = true;

    std::string str() const;
};

// Rewrites `variable` in the initial variables, which must be monomials with coefficient 1.
LaurentReport laurent_report(const ToroidalSeed& initial, const TorusElement& variable);

// ---------------------------------------------------------------- classical oracle

using ClassicalPoly = std::map<YMonomial, int64_t>;

struct ClassicalSeed {
    std::vector<ClassicalPoly> vars;
    int m = 0;
    IntMatrix B;
};

ClassicalPoly classical_mul(const ClassicalPoly& x, const ClassicalPoly& y);
ClassicalPoly classical_divide(const ClassicalPoly& x, const ClassicalPoly& d);
std::string classical_text(const ClassicalPoly& x, bool finite);

ClassicalSeed classical_specialize(const ToroidalSeed& seed);
ClassicalSeed classical_mutate(const ClassicalSeed& seed, int k);

struct ClassicalGraph {
    size_t nodes = 0;
    size_t edges = 0;
    bool finite = false;
};

ClassicalGraph classical_graph(const ClassicalSeed& seed, size_t max_nodes, bool finite_vars);

// ---------------------------------------------------------------- quivers

// "A3", "D4", "A1xA2", ... for an orientation of a Dynkin diagram; empty otherwise.
std::string dynkin_label(const IntMatrix& Bp);

struct QuiverClass {
    std::string label;  // "UNKNOWN" when no Dynkin orientation is met
    size_t explored = 0;
    bool finite = false;
};

QuiverClass quiver_mutation_class(const IntMatrix& Bp, size_t max_nodes);

IntMatrix principal_part(const IntMatrix& B, int m);

}  // namespace torclus

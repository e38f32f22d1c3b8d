#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torclus/params.hpp"

namespace torclus {

using IntMatrix = std::vector<std::vector<int64_t>>;

// Dynkin data plus the cached expansion of the inverse quantized Cartan matrix.
// Nodes are numbered 1..n throughout the public API.
class CartanData {
public:
    const std::string& label() const { return label_; }
    int rank() const { return n_; }
    int64_t C(int i, int j) const { return C_[i - 1][j - 1]; }
    const IntMatrix& matrix() const { return C_; }
    int d(int i) const { return d_[i - 1]; }
    int coxeter() const { return h_; }
    bool simply_laced() const { return simply_laced_; }
    bool adjacent(int i, int j) const { return i != j && C_[i - 1][j - 1] != 0; }
    std::vector<int> neighbors(int i) const;

    // C~ satisfies C~(m + half_period) = sign * C~(m) for m >= 1.
    int half_period() const { return half_period_; }
    int period_sign() const { return period_sign_; }
    int full_period() const { return period_sign_ == 1 ? half_period_ : 2 * half_period_; }

    int64_t ctilde(int i, int j, int64_t m) const;

    friend std::shared_ptr<const CartanData> make_cartan(const std::string& label);

private:
    std::string label_;
    int n_ = 0;
    IntMatrix C_;
    std::vector<int> d_;
    int h_ = 0;
    bool simply_laced_ = true;
    int half_period_ = 0;
    int period_sign_ = 1;
    // table_[i][j][m - 1] for 1 <= m <= full_period()
    std::vector<std::vector<std::vector<int64_t>>> table_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

// Accepts A1..A8, D4..D8, E6, E7, E8, B2; UnknownType otherwise.
CartanPtr make_cartan(const std::string& label);

// Coefficients of z^0..z^order of every entry of C(z)^{-1}, by order-by-order inversion.
// result[i][j][m] with 0-based nodes.
std::vector<std::vector<std::vector<int64_t>>> ctilde_series(const CartanData& data, int order);

int64_t ctilde_typeA_closed(int n, int i, int j, int64_t m);

int64_t n_exponent(const CartanData& data, int64_t a, int i, int64_t p, int j, int64_t s);

// All exponents N_a(i,p;j,s) at once, as a doubled ExpSeq.
ExpSeq n_sequence(const CartanData& data, int i, int64_t p, int j, int64_t s);

// Exponents of the commutation factor of A_{i,r} and Y_{j,s}.
ExpSeq ay_sequence(const CartanData& data, int i, int64_t r, int j, int64_t s);
// delta_ij (delta_{a,r-s-1} - delta_{a,r-s+1} - delta_{a,s-r-1} + delta_{a,s-r+1}), doubled.
ExpSeq ay_closed_form(int i, int64_t r, int j, int64_t s);

}  // namespace torclus

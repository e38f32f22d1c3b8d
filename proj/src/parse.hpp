#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "torclus/params.hpp"

namespace torclus::detail {

// One summand of a parsed expression: coefficient times a commutative monomial.
// Variables are keyed (i, r); X[i] is read as (i, 0).
struct RawTerm {
    ParamLaurent coef;
    std::map<std::pair<int64_t, int64_t>, int64_t> y;
};

struct RawExpr {
    std::vector<RawTerm> terms;
    bool uses_x = false;
    bool uses_y = false;
};

RawExpr parse_raw(std::string_view text);

}  // namespace torclus::detail

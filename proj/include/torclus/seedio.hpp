#pragma once

#include <string>

#include "torclus/cluster.hpp"

namespace torclus {

// Seed files are JSON documents:
//   type          Cartan label, or "finite"
//   backend       {"kind": "cartan"} or {"kind": "finite", "params": [...], "lambdas": [[[...]]]}
//   quotient      "none" | "standard" | list of relation monomials (optional)
//   project       parameter indices kept by a Cartan backend (optional)
//   variables     expression strings, exchangeable ones first
//   B             row-major, one row per variable
//   exchangeable  m
// Malformed documents raise ParseError.
ToroidalSeed seed_from_json(const std::string& text);
std::string seed_to_json(const ToroidalSeed& seed);

QuotientContext parse_quotient(const std::string& text);

}  // namespace torclus

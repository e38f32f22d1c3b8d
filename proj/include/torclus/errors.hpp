#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torclus {

enum class ErrorKind {
    DivergentSpecialization,
    NotQuasiCommuting,
    NotDivisible,
    OddExponent,
    Truncated,
    NotIDominant,
    NotThin,
    UnknownLabel,
    NotBipartite,
    AmbiguousSupport,
    NoSolution,
    UnknownType,
    ParseError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Overflow-checked integer helpers; every coefficient in the library goes through these.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace torclus

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace functcat {

// Exact scalars. Rationals are plain mpq values; prime-field elements are
// canonical residues in [0, p) with denominator 1.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime_field };

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    unsigned long characteristic = 0;  // 0 for Q, the prime p otherwise

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(unsigned long p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Canonical representative of q in the field (identity over Q, residue mod p
// over F_p; rejects denominators divisible by p).
Scalar freduce(const FieldSpec& fs, const Scalar& q);

Scalar fadd(const FieldSpec& fs, const Scalar& a, const Scalar& b);
Scalar fsub(const FieldSpec& fs, const Scalar& a, const Scalar& b);
Scalar fmul(const FieldSpec& fs, const Scalar& a, const Scalar& b);
Scalar fneg(const FieldSpec& fs, const Scalar& a);
Scalar finv(const FieldSpec& fs, const Scalar& a);  // throws FieldError on 0
Scalar fdiv(const FieldSpec& fs, const Scalar& a, const Scalar& b);

inline bool fis_zero(const Scalar& a) { return sgn(a) == 0; }

// Parses "n" or "n/d" (d nonzero; over F_p the value n * d^{-1} mod p).
Scalar parse_scalar(const FieldSpec& fs, const std::string& text);
std::string scalar_str(const Scalar& a);

}  // namespace functcat

#include "functcat/field.hpp"

namespace functcat {

FieldSpec FieldSpec::prime(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
        throw FieldError("characteristic must be prime, got " + std::to_string(p));
    return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::str() const {
    if (kind == FieldKind::rationals) return "Q";
    return "F_" + std::to_string(characteristic);
}

Scalar freduce(const FieldSpec& fs, const Scalar& q) {
    if (fs.kind == FieldKind::rationals) return q;
    mpz_class p(fs.characteristic);
    mpz_class den = q.get_den();
    mpz_class num = q.get_num();
    mpz_class dmod = den % p;
    if (sgn(dmod) == 0) throw FieldError("denominator divisible by the characteristic");
    if (dmod != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
            throw FieldError("non-invertible denominator in F_p");
        num *= dinv;
    }
    mpz_class r = num % p;
    if (sgn(r) < 0) r += p;
    return Scalar(r);
}

Scalar fadd(const FieldSpec& fs, const Scalar& a, const Scalar& b) { return freduce(fs, a + b); }
Scalar fsub(const FieldSpec& fs, const Scalar& a, const Scalar& b) { return freduce(fs, a - b); }
Scalar fmul(const FieldSpec& fs, const Scalar& a, const Scalar& b) { return freduce(fs, a * b); }
Scalar fneg(const FieldSpec& fs, const Scalar& a) { return freduce(fs, -a); }

Scalar finv(const FieldSpec& fs, const Scalar& a) {
    if (fis_zero(a)) throw FieldError("inverse of zero");
    if (fs.kind == FieldKind::rationals) return 1 / a;
    mpz_class p(fs.characteristic);
    mpz_class v = freduce(fs, a).get_num();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw FieldError("non-invertible element in F_p");
    return Scalar(inv);
}

Scalar fdiv(const FieldSpec& fs, const Scalar& a, const Scalar& b) {
    return fmul(fs, a, finv(fs, b));
}

Scalar parse_scalar(const FieldSpec& fs, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            Scalar v(n);
            return freduce(fs, v);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (sgn(den) == 0) throw FieldError("zero denominator");
        Scalar v(num, den);
        v.canonicalize();
        return freduce(fs, v);
    } catch (const std::invalid_argument&) {
        throw FieldError("bad scalar literal: " + text);
    }
}

std::string scalar_str(const Scalar& a) {
    return a.get_str();
}

}  // namespace functcat

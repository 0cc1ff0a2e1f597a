#include "hopfcorr/field.hpp"

namespace hopfcorr {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Rat Rat::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw hc_error("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw hc_error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Fp Fp::inv() const {
    if (!p_) {
        if (v_ == 1) return Fp(1);
        if (v_ == -1) return Fp(-1);
        throw hc_error("Fp: inverse of unbound integer " + std::to_string(v_));
    }
    if (v_ == 0) throw hc_error("Fp: division by zero");
    // extended Euclid
    long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
        long q = a / b;
        long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
}

Fp Fp::parse(const std::string& s, long p) {
    size_t pos = 0;
    long n = std::stol(s, &pos);
    if (pos != s.size()) throw hc_error("Fp: cannot parse '" + s + "'");
    return Fp(n, p);
}

FieldDesc FieldDesc::prime_field(long p) {
    if (!is_prime(p)) throw hc_error("field: " + std::to_string(p) + " is not prime");
    return {p};
}

FieldDesc FieldDesc::parse(const std::string& tag) {
    if (tag == "Q") return rationals();
    if (tag.rfind("p=", 0) == 0) return prime_field(std::stol(tag.substr(2)));
    throw hc_error("field: unknown descriptor '" + tag + "'");
}

}  // namespace hopfcorr

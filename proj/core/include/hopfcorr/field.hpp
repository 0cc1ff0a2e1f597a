// Exact field scalars: arbitrary-precision rationals and prime fields GF(p).
// Every operation is exact; nothing here ever rounds.

#ifndef HOPFCORR_FIELD_HPP
#define HOPFCORR_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfcorr {

struct hc_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(long n);

// Arbitrary-precision rational, canonical (reduced, positive denominator).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw hc_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat inv() const {
        if (is_zero()) throw hc_error("Rat: division by zero");
        return Rat(mpq_class(1 / v_));
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }
    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string str() const { return v_.get_str(); }
    static Rat parse(const std::string& s);

private:
    mpq_class v_;
};

// Element of GF(p). An element normally carries its modulus; elements built
// from bare integer literals (modulus 0) act as canonical images of Z and
// bind to the other operand's modulus on first contact.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long n) : v_(n), p_(0) {}
    Fp(long n, long p) : p_(p) {
        if (p < 2) throw hc_error("Fp: modulus must be >= 2");
        v_ = n % p;
        if (v_ < 0) v_ += p;
    }

    long modulus() const { return p_; }
    long residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return p_ ? Fp(p_ - v_, p_) : Fp(-v_); }
    Fp inv() const;

    friend Fp operator+(const Fp& a, const Fp& b) {
        long p = join(a, b);
        if (!p) return Fp(a.v_ + b.v_);
        return Fp(a.lift(p) + b.lift(p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long p = join(a, b);
        if (!p) return Fp(a.v_ - b.v_);
        return Fp(a.lift(p) - b.lift(p), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long p = join(a, b);
        if (!p) return Fp(a.v_ * b.v_);
        return Fp(a.lift(p) * b.lift(p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp& operator+=(const Fp& b) { *this = *this + b; return *this; }
    Fp& operator-=(const Fp& b) { *this = *this - b; return *this; }
    Fp& operator*=(const Fp& b) { *this = *this * b; return *this; }
    friend bool operator==(const Fp& a, const Fp& b) {
        long p = join(a, b);
        if (!p) return a.v_ == b.v_;
        return a.lift(p) == b.lift(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }
    static Fp parse(const std::string& s, long p);

private:
    long lift(long p) const { long r = v_ % p; return r < 0 ? r + p : r; }
    static long join(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw hc_error("Fp: mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    long v_, p_;
};

// Runtime field descriptor: the rationals or GF(p) with p prime.
struct FieldDesc {
    long p = 0;  // 0 means Q

    bool is_rational() const { return p == 0; }
    std::string tag() const { return p ? "p=" + std::to_string(p) : "Q"; }
    static FieldDesc rationals() { return {0}; }
    static FieldDesc prime_field(long p);
    static FieldDesc parse(const std::string& tag);
    friend bool operator==(const FieldDesc& a, const FieldDesc& b) { return a.p == b.p; }
};

template <class K> struct field_of;
template <> struct field_of<Rat> {
    static FieldDesc desc(const Rat&) { return FieldDesc::rationals(); }
    static Rat from_long(long n, const FieldDesc&) { return Rat(n); }
    static Rat parse(const std::string& s, const FieldDesc&) { return Rat::parse(s); }
};
template <> struct field_of<Fp> {
    static FieldDesc desc(const Fp& x) { return FieldDesc{x.modulus()}; }
    static Fp from_long(long n, const FieldDesc& f) { return Fp(n, f.p); }
    static Fp parse(const std::string& s, const FieldDesc& f) { return Fp::parse(s, f.p); }
};

}  // namespace hopfcorr

#endif

// Seeded generator with self-contained integer reduction, so identical seeds
// give identical streams on every platform.

#ifndef HOPFCORR_RNG_HPP
#define HOPFCORR_RNG_HPP

#include <cstdint>
#include <random>

#include "hopfcorr/matrix.hpp"

namespace hopfcorr {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }
    // inclusive bounds; modulo reduction (bias is irrelevant here)
    long uniform(long lo, long hi) {
        return lo + long(next_u64() % uint64_t(hi - lo + 1));
    }
    bool coin() { return next_u64() & 1; }

    // Small-box coefficient: {-2..2} over Q, any residue over GF(p).
    template <class K>
    K coefficient(const FieldDesc& field) {
        if (field.is_rational()) return field_of<K>::from_long(uniform(-2, 2), field);
        return field_of<K>::from_long(uniform(0, field.p - 1), field);
    }

    template <class K>
    Vec<K> vector(int n, const FieldDesc& field) {
        Vec<K> v(n);
        for (int i = 0; i < n; ++i) v[i] = coefficient<K>(field);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hopfcorr

#endif

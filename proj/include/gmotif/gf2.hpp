#pragma once

// Arithmetic in GF(2^b) for 1 <= b <= 64. Elements are b-bit values read as
// polynomials over GF(2) modulo a fixed irreducible reduction polynomial;
// addition is XOR. Three interchangeable multiplication strategies (log/exp
// tables for b <= 16, carry-less multiply where the CPU has it, and a shift
// and add fallback) produce bit-identical results.

#include <gmotif/prng.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#include <cstring>
#define GMOTIF_CLMUL_COMPILED 1
#endif

namespace gmotif::gf2 {

using Elem = std::uint64_t;
using u128 = unsigned __int128;

// Degree-b irreducible polynomial encoded as the bitmask of its low-order b
// coefficients; the x^b term is implicit. Constant term is always 1.
struct FieldParams {
    unsigned bits = 64;
    std::uint64_t reduction_poly = 0x1b;

    bool operator==(const FieldParams&) const = default;
};

namespace detail {

inline int poly_degree(u128 v) {
    if (v == 0) return -1;
    auto hi = static_cast<std::uint64_t>(v >> 64);
    auto lo = static_cast<std::uint64_t>(v);
    return hi ? 127 - __builtin_clzll(hi) : 63 - __builtin_clzll(lo);
}

inline u128 poly_mod(u128 a, u128 m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= m << (da - dm);
    return a;
}

inline u128 poly_mul_mod(u128 a, u128 b, u128 m) {
    u128 r = 0;
    a = poly_mod(a, m);
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (poly_degree(a) >= poly_degree(m)) a ^= m << (poly_degree(a) - poly_degree(m));
    }
    return poly_mod(r, m);
}

inline u128 poly_gcd(u128 a, u128 b) {
    while (b) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// Carry-less 64x64 -> 128 product, software version.
inline u128 clmul_soft(std::uint64_t a, std::uint64_t b) {
    u128 r = 0;
    while (b) {
        int t = __builtin_ctzll(b);
        r ^= static_cast<u128>(a) << t;
        b &= b - 1;
    }
    return r;
}

// Reduce a carry-less product (degree <= 2*bits - 2) modulo x^bits + poly.
// Uses x^bits == poly (mod f); the top part shrinks every round.
inline std::uint64_t fold_reduce(u128 v, std::uint64_t poly, unsigned bits) {
    const std::uint64_t mask = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (;;) {
        u128 top = v >> bits;
        if (top == 0) break;
        v = (v & mask) ^ clmul_soft(static_cast<std::uint64_t>(top), poly);
    }
    return static_cast<std::uint64_t>(v);
}

#if defined(GMOTIF_CLMUL_COMPILED)
inline u128 clmul_hw(std::uint64_t a, std::uint64_t b) {
    __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                     _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    u128 r;
    std::memcpy(&r, &p, 16);
    return r;
}

inline std::uint64_t fold_reduce_hw(u128 v, std::uint64_t poly, unsigned bits) {
    const std::uint64_t mask = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (;;) {
        u128 top = v >> bits;
        if (top == 0) break;
        v = (v & mask) ^ clmul_hw(static_cast<std::uint64_t>(top), poly);
    }
    return static_cast<std::uint64_t>(v);
}
#endif

inline bool cpu_has_clmul() {
#if defined(GMOTIF_CLMUL_COMPILED)
    static const bool has = __builtin_cpu_supports("pclmul") != 0;
    return has;
#else
    return false;
#endif
}

} // namespace detail

// Deterministic irreducibility test: f of degree b is irreducible over GF(2)
// iff x^(2^b) == x (mod f) and gcd(x^(2^(b/p)) - x, f) = 1 for every prime
// p dividing b.
inline bool is_irreducible(unsigned bits, std::uint64_t mask) {
    if (bits == 0 || bits > 64) return false;
    if ((mask & 1) == 0) return false; // divisible by x
    const u128 f = (static_cast<u128>(1) << bits) | mask;
    std::vector<unsigned> primes;
    for (unsigned p = 2, r = bits; p <= r; ++p)
        if (r % p == 0) {
            primes.push_back(p);
            while (r % p == 0) r /= p;
        }
    const u128 x = 2;
    u128 s = detail::poly_mod(x, f);
    for (unsigned i = 1; i <= bits; ++i) {
        s = detail::poly_mul_mod(s, s, f);
        for (unsigned p : primes)
            if (i == bits / p && detail::poly_gcd(s ^ x, f) != 1) return false;
    }
    return s == detail::poly_mod(x, f);
}

// Brute-force check by trial division over all candidate factors of degree
// <= bits/2; independent of is_irreducible, only tractable for small degrees.
inline bool is_irreducible_trial_division(unsigned bits, std::uint64_t mask) {
    if (bits > 16) throw std::invalid_argument{"trial division check limited to bits <= 16"};
    if ((mask & 1) == 0) return false;
    const u128 f = (static_cast<u128>(1) << bits) | mask;
    for (std::uint64_t g = 2; detail::poly_degree(g) <= static_cast<int>(bits / 2); ++g)
        if (detail::poly_mod(f, g) == 0) return false;
    return true;
}

// Lexicographically smallest irreducible polynomial of each degree (smallest
// low-coefficient mask with constant term 1), precomputed for the degrees the
// solver uses. Other degrees are searched on demand.
inline std::optional<std::uint64_t> reduction_poly_table(unsigned bits) {
    switch (bits) {
    case 1: return 0x1;
    case 2: return 0x3;
    case 3: return 0x3;
    case 4: return 0x3;
    case 5: return 0x5;
    case 6: return 0x3;
    case 7: return 0x3;
    case 8: return 0x1b;
    case 9: return 0x3;
    case 10: return 0x9;
    case 11: return 0x5;
    case 12: return 0x9;
    case 13: return 0x1b;
    case 14: return 0x21;
    case 15: return 0x3;
    case 16: return 0x2b;
    case 32: return 0x8d;
    case 64: return 0x1b;
    default: return std::nullopt;
    }
}

inline std::uint64_t smallest_irreducible(unsigned bits) {
    if (bits == 0 || bits > 64) throw std::invalid_argument{"field width must be in 1..64"};
    if (auto t = reduction_poly_table(bits)) return *t;
    for (std::uint64_t mask = 1;; mask += 2)
        if (is_irreducible(bits, mask)) return mask;
}

inline bool field_admits_k(unsigned bits, long long k) {
    if (k < 1) return false;
    return bits >= 40 || (1ull << bits) >= 6ull * static_cast<unsigned long long>(k);
}

// Field parameters for a k-parameterized run: 2^b >= 6k must hold. Defaults
// to b = 64 so a single trial already has negligible failure probability; a
// smaller width may be requested explicitly.
inline FieldParams params_for_k(long long k, std::optional<unsigned> requested_bits = std::nullopt) {
    if (k < 1) throw std::invalid_argument{"k must be positive"};
    unsigned bits = requested_bits.value_or(64);
    if (bits == 0 || bits > 64) throw std::invalid_argument{"field width must be in 1..64"};
    if (!field_admits_k(bits, k))
        throw std::invalid_argument{"field too small: need 2^bits >= 6k"};
    return FieldParams{bits, smallest_irreducible(bits)};
}

inline unsigned minimal_bits_for_k(long long k) {
    unsigned b = 1;
    while (!field_admits_k(b, k)) ++b;
    return b;
}

class Field {
public:
    enum class MulPath { table, clmul, portable };

    explicit Field(FieldParams params) : params_{params} {
        if (params_.bits == 0 || params_.bits > 64)
            throw std::invalid_argument{"field width must be in 1..64"};
        if (params_.bits < 64 && params_.reduction_poly >= (1ull << params_.bits))
            throw std::invalid_argument{"reduction polynomial mask wider than field"};
        if (!is_irreducible(params_.bits, params_.reduction_poly))
            throw std::invalid_argument{"reduction polynomial is not irreducible"};
        mask_ = params_.bits == 64 ? ~0ull : (1ull << params_.bits) - 1;
        if (params_.bits <= 16)
            build_tables();
        path_ = params_.bits <= 16      ? MulPath::table
                : detail::cpu_has_clmul() ? MulPath::clmul
                                          : MulPath::portable;
    }

    const FieldParams& params() const { return params_; }
    unsigned bits() const { return params_.bits; }
    std::uint64_t reduction_poly() const { return params_.reduction_poly; }
    std::uint64_t elem_mask() const { return mask_; }
    MulPath mul_path() const { return path_; }

    Elem add(Elem a, Elem b) const { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        switch (path_) {
        case MulPath::table: return mul_table(a, b);
#if defined(GMOTIF_CLMUL_COMPILED)
        case MulPath::clmul: return detail::fold_reduce_hw(detail::clmul_hw(a, b), params_.reduction_poly, params_.bits);
#endif
        default: return mul_portable(a, b);
        }
    }

    Elem mul_portable(Elem a, Elem b) const {
        return detail::fold_reduce(detail::clmul_soft(a, b), params_.reduction_poly, params_.bits);
    }

    Elem mul_table(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error{"inverse of zero"};
        if (params_.bits <= 16) {
            const std::uint32_t ord = group_order();
            return exp_[ord - log_[a]];
        }
        // Fermat: a^(2^b - 2)
        return pow(a, params_.bits == 64 ? ~0ull - 1 : (1ull << params_.bits) - 2);
    }

    Elem random_elem(Rng& rng) const { return rng() & mask_; }

    std::uint32_t group_order() const { return static_cast<std::uint32_t>(mask_); }

    // Runs fn with a self-contained multiplication functor so hot loops can
    // inline field arithmetic. All variants agree bit-exactly.
    template <class Fn> decltype(auto) with_ring(Fn&& fn) const;

private:
    void build_tables() {
        const std::uint32_t ord = group_order(); // 2^b - 1
        log_.assign(std::size_t{1} << params_.bits, 0);
        exp_.assign(2 * static_cast<std::size_t>(ord) + 1, 1);
        const Elem g = find_generator();
        Elem v = 1;
        for (std::uint32_t i = 0; i < ord; ++i) {
            exp_[i] = static_cast<std::uint16_t>(v);
            log_[v] = static_cast<std::uint16_t>(i);
            v = mul_portable(v, g);
        }
        if (v != 1) throw std::logic_error{"generator order mismatch"};
        for (std::uint32_t i = ord; i <= 2 * ord; ++i) exp_[i] = exp_[i - ord];
    }

    Elem find_generator() const {
        const std::uint32_t ord = group_order();
        if (ord == 1) return 1;
        std::vector<std::uint32_t> primes;
        for (std::uint32_t p = 2, r = ord; p <= r; ++p)
            if (r % p == 0) {
                primes.push_back(p);
                while (r % p == 0) r /= p;
            }
        for (Elem g = 2;; ++g) {
            bool ok = true;
            for (std::uint32_t p : primes) {
                Elem t = 1, base = g;
                for (std::uint32_t e = ord / p; e; e >>= 1) {
                    if (e & 1) t = mul_portable(t, base);
                    base = mul_portable(base, base);
                }
                if (t == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
    }

    FieldParams params_;
    std::uint64_t mask_ = 0;
    MulPath path_ = MulPath::portable;
    std::vector<std::uint16_t> log_;
    std::vector<std::uint16_t> exp_;
};

// Multiplication functors for templated inner loops. Value semantics; cheap
// to copy into worker threads.
struct TableMul {
    const std::uint16_t* log;
    const std::uint16_t* exp;
    Elem operator()(Elem a, Elem b) const { return (a && b) ? exp[log[a] + log[b]] : 0; }
};

struct PortableMul {
    std::uint64_t poly;
    unsigned bits;
    Elem operator()(Elem a, Elem b) const {
        return detail::fold_reduce(detail::clmul_soft(a, b), poly, bits);
    }
};

#if defined(GMOTIF_CLMUL_COMPILED)
struct ClmulMul {
    std::uint64_t poly;
    unsigned bits;
    Elem operator()(Elem a, Elem b) const {
        return detail::fold_reduce_hw(detail::clmul_hw(a, b), poly, bits);
    }
};
#endif

template <class Fn> decltype(auto) Field::with_ring(Fn&& fn) const {
    switch (path_) {
    case MulPath::table: return fn(TableMul{log_.data(), exp_.data()});
#if defined(GMOTIF_CLMUL_COMPILED)
    case MulPath::clmul: return fn(ClmulMul{params_.reduction_poly, params_.bits});
#endif
    default: return fn(PortableMul{params_.reduction_poly, params_.bits});
    }
}

} // namespace gmotif::gf2

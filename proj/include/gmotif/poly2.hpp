#pragma once

// Sparse multivariate polynomials over GF(2), used by the symbolic test
// oracles. A polynomial is the set of monomials with odd coefficient; adding
// a monomial toggles its presence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gmotif {

enum class VarKind : std::uint32_t {
    vertex = 1, // x_u
    arc,        // y_(u,v)
    label,      // z_(i,j)
    shade_in,   // v_(i,d)
    shade_out,  // w_(d,j)
    eta_s,      // substitution-cost indeterminate
    eta_id,     // insert/delete-cost indeterminate
};

using VarId = std::uint32_t;

inline VarId make_var(VarKind kind, std::uint32_t a = 0, std::uint32_t b = 0) {
    if (a >= (1u << 12) || b >= (1u << 12)) throw std::invalid_argument{"variable index too large"};
    return (static_cast<std::uint32_t>(kind) << 24) | (a << 12) | b;
}

inline VarKind var_kind(VarId id) { return static_cast<VarKind>(id >> 24); }
inline std::uint32_t var_a(VarId id) { return (id >> 12) & 0xfff; }
inline std::uint32_t var_b(VarId id) { return id & 0xfff; }

namespace var {
inline VarId x(int u) { return make_var(VarKind::vertex, static_cast<std::uint32_t>(u)); }
inline VarId y(int u, int v) { return make_var(VarKind::arc, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)); }
inline VarId z(int i, int j) { return make_var(VarKind::label, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)); }
inline VarId v(int i, int d) { return make_var(VarKind::shade_in, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d)); }
inline VarId w(int d, int j) { return make_var(VarKind::shade_out, static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(j)); }
inline VarId eta_s() { return make_var(VarKind::eta_s); }
inline VarId eta_id() { return make_var(VarKind::eta_id); }
} // namespace var

// Exponent vector sorted by variable id.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;

    std::uint32_t degree_of(VarId id) const {
        for (const auto& [var, e] : factors)
            if (var == id) return e;
        return 0;
    }

    std::uint32_t degree_of_kind(VarKind kind) const {
        std::uint32_t d = 0;
        for (const auto& [var, e] : factors)
            if (var_kind(var) == kind) d += e;
        return d;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [var, e] : factors) d += e;
        return d;
    }

    bool linear_in_kind(VarKind kind) const {
        for (const auto& [var, e] : factors)
            if (var_kind(var) == kind && e > 1) return false;
        return true;
    }

    Monomial& mul_var(VarId id, std::uint32_t e = 1) {
        auto it = std::lower_bound(factors.begin(), factors.end(), id,
                                   [](const auto& f, VarId v) { return f.first < v; });
        if (it != factors.end() && it->first == id)
            it->second += e;
        else
            factors.insert(it, {id, e});
        return *this;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors.reserve(a.factors.size() + b.factors.size());
        std::size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first)
                r.factors.push_back(a.factors[i++]);
            else if (a.factors[i].first > b.factors[j].first)
                r.factors.push_back(b.factors[j++]);
            else {
                r.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
                ++i, ++j;
            }
        }
        for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
        for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
        return r;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& [var, e] : m.factors) {
            h = (h ^ var) * 1099511628211ull;
            h = (h ^ e) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class Poly2 {
public:
    Poly2() = default;

    static Poly2 zero() { return {}; }
    static Poly2 one() { return from_monomial(Monomial{}); }
    static Poly2 variable(VarId id) { return from_monomial(Monomial{}.mul_var(id)); }
    static Poly2 from_monomial(Monomial m) {
        Poly2 p;
        p.toggle(std::move(m));
        return p;
    }

    bool is_zero() const { return monos_.empty(); }
    std::size_t size() const { return monos_.size(); }
    const std::unordered_set<Monomial, MonomialHash>& monomials() const { return monos_; }

    void toggle(Monomial m) {
        auto it = monos_.find(m);
        if (it != monos_.end())
            monos_.erase(it);
        else
            monos_.insert(std::move(m));
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& m : o.monos_) toggle(m);
        return *this;
    }

    friend Poly2 operator+(Poly2 a, const Poly2& b) {
        a += b;
        return a;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& ma : a.monos_)
            for (const auto& mb : b.monos_) r.toggle(ma * mb);
        return r;
    }

    Poly2 pow(std::uint32_t e) const {
        Poly2 r = one();
        for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Poly2& o) const { return monos_ == o.monos_; }

private:
    std::unordered_set<Monomial, MonomialHash> monos_;
};

} // namespace gmotif

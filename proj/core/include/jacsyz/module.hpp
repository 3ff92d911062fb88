#pragma once

#include <optional>

#include "jacsyz/parse.hpp"
#include "jacsyz/ring.hpp"

namespace jacsyz {

// Graded free module S(-shifts[0]) + ... + S(-shifts[rank-1]).
// The element with polynomial degree q in slot i has graded degree q + shifts[i].
template <class F>
struct FreeModule {
    Ring<F> ring{};
    int rank = 0;
    std::vector<int> shifts;

    static FreeModule make(const Ring<F>& ring, std::vector<int> shifts) {
        FreeModule m{ring, static_cast<int>(shifts.size()), std::move(shifts)};
        if (m.rank < 1) throw std::invalid_argument("free module needs rank >= 1");
        return m;
    }
    static FreeModule ideal_ambient(const Ring<F>& ring) { return make(ring, {0}); }

    FreeModule twisted(int a) const {
        FreeModule m = *this;
        for (int& s : m.shifts) s += a;
        return m;
    }

    bool operator==(const FreeModule& o) const {
        return ring == o.ring && rank == o.rank && shifts == o.shifts;
    }
    bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

template <class F>
struct ModuleElement {
    FreeModule<F> mod{};
    std::vector<Polynomial<F>> comps;

    static ModuleElement make(FreeModule<F> m, std::vector<Polynomial<F>> comps) {
        if (static_cast<int>(comps.size()) != m.rank)
            throw std::invalid_argument("component count does not match module rank");
        for (const auto& c : comps) require_same_ring(c.ring(), m.ring);
        return ModuleElement{std::move(m), std::move(comps)};
    }
    static ModuleElement zero(const FreeModule<F>& m) {
        return ModuleElement{m, std::vector<Polynomial<F>>(m.rank, Polynomial<F>::zero(m.ring))};
    }
    // e_pos scaled by a polynomial
    static ModuleElement unit(const FreeModule<F>& m, int pos, Polynomial<F> p) {
        auto e = zero(m);
        e.comps.at(pos) = std::move(p);
        return e;
    }

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const ModuleElement& o) const { return mod == o.mod && comps == o.comps; }
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
        if (a.mod != b.mod) throw std::invalid_argument("module mismatch");
        ModuleElement r = a;
        for (int i = 0; i < a.mod.rank; ++i) r.comps[i] = r.comps[i] + b.comps[i];
        return r;
    }
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
        if (a.mod != b.mod) throw std::invalid_argument("module mismatch");
        ModuleElement r = a;
        for (int i = 0; i < a.mod.rank; ++i) r.comps[i] = r.comps[i] - b.comps[i];
        return r;
    }
};

// wrap a polynomial as an element of the rank-1, shift-0 module
template <class F>
ModuleElement<F> ideal_element(const Polynomial<F>& p) {
    return ModuleElement<F>::make(FreeModule<F>::ideal_ambient(p.ring()), {p});
}

template <class F>
std::vector<ModuleElement<F>> ideal_elements(const std::vector<Polynomial<F>>& ps) {
    std::vector<ModuleElement<F>> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(ideal_element(p));
    return out;
}

// Graded degree of a homogeneous element (all nonzero components homogeneous,
// agreeing after shifts); nullopt for the zero element or inhomogeneous input.
template <class F>
std::optional<int> graded_degree(const ModuleElement<F>& v) {
    std::optional<int> deg;
    for (int i = 0; i < v.mod.rank; ++i) {
        if (v.comps[i].is_zero()) continue;
        auto d = v.comps[i].homogeneous_degree();
        if (!d) return std::nullopt;
        int g = *d + v.mod.shifts[i];
        if (deg && *deg != g) return std::nullopt;
        deg = g;
    }
    return deg;
}

template <class F>
bool is_homogeneous_element(const ModuleElement<F>& v) {
    return v.is_zero() || graded_degree(v).has_value();
}

template <class F>
std::string to_string(const ModuleElement<F>& v) {
    std::string s = "(";
    for (int i = 0; i < v.mod.rank; ++i) {
        if (i) s += ", ";
        s += to_string(v.comps[i]);
    }
    return s + ")";
}

}  // namespace jacsyz

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacsyz {

// Exponent vector; index = variable index in x0..x_{nvars-1}.
struct Monomial {
    std::vector<int> exp;

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        for (int e : exp)
            if (e) return false;
        return true;
    }

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m = one(nvars);
        m.exp[i] = power;
        return m;
    }

    bool operator==(const Monomial&) const = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

// does a divide b?
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

// b / a, requires a | b
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < r.exp.size(); ++i) {
        r.exp[i] -= a.exp[i];
        if (r.exp[i] < 0) throw std::invalid_argument("monomial division with remainder");
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i)
        if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

// Fixed storage order for polynomial terms (grevlex with x0 > x1 > ...).
// Returns +1 if a > b, 0 if equal, -1 if a < b.
int canonical_cmp(const Monomial& a, const Monomial& b);

// Total multiplicative monomial orders used by the Groebner engine.
struct TermOrder {
    enum class Kind { GrevLex, Lex };

    Kind kind = Kind::GrevLex;
    // variable precedence, most significant first; empty = identity (x0 > x1 > ...)
    std::vector<int> precedence;

    static TermOrder grevlex() { return TermOrder{Kind::GrevLex, {}}; }
    static TermOrder lex() { return TermOrder{Kind::Lex, {}}; }

    void validate(int nvars) const;
    int cmp(const Monomial& a, const Monomial& b) const;

    bool operator==(const TermOrder&) const = default;
};

// A leading term of a free-module element: monomial at a component slot.
struct ModuleTerm {
    Monomial mono;
    int pos = 0;
    bool operator==(const ModuleTerm&) const = default;
};

// Order on module monomials x^a e_pos. Lower component index wins ties.
struct ModuleOrder {
    enum class Strategy { PositionOverTerm, TermOverPosition, Schreyer };

    TermOrder base;
    Strategy strategy = Strategy::TermOverPosition;
    // Schreyer: leading terms the order is induced from, one per component slot.
    std::vector<ModuleTerm> induced;

    static ModuleOrder top(TermOrder t = TermOrder::grevlex()) {
        return ModuleOrder{std::move(t), Strategy::TermOverPosition, {}};
    }
    static ModuleOrder pot(TermOrder t = TermOrder::grevlex()) {
        return ModuleOrder{std::move(t), Strategy::PositionOverTerm, {}};
    }
    static ModuleOrder schreyer(TermOrder t, std::vector<ModuleTerm> lead) {
        return ModuleOrder{std::move(t), Strategy::Schreyer, std::move(lead)};
    }

    int cmp(const Monomial& ma, int pa, const Monomial& mb, int pb) const;

    bool operator==(const ModuleOrder&) const = default;
};

std::string mono_to_string(const Monomial& m);

}  // namespace jacsyz

#include "jacsyz/monomial.hpp"

#include <algorithm>

namespace jacsyz {

namespace {

// grevlex with the given precedence (most significant variable first)
int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& prec) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (prec.empty()) {
        for (int i = static_cast<int>(a.exp.size()) - 1; i >= 0; --i) {
            int d = a.exp[i] - b.exp[i];
            if (d) return d > 0 ? -1 : 1;
        }
        return 0;
    }
    for (int i = static_cast<int>(prec.size()) - 1; i >= 0; --i) {
        int v = prec[i];
        int d = a.exp[v] - b.exp[v];
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& prec) {
    if (prec.empty()) {
        for (size_t i = 0; i < a.exp.size(); ++i) {
            int d = a.exp[i] - b.exp[i];
            if (d) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    for (int v : prec) {
        int d = a.exp[v] - b.exp[v];
        if (d) return d > 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int canonical_cmp(const Monomial& a, const Monomial& b) {
    static const std::vector<int> id;
    return grevlex_cmp(a, b, id);
}

void TermOrder::validate(int nvars) const {
    if (precedence.empty()) return;
    if (static_cast<int>(precedence.size()) != nvars)
        throw std::invalid_argument("term order precedence has wrong length");
    std::vector<bool> seen(nvars, false);
    for (int v : precedence) {
        if (v < 0 || v >= nvars || seen[v])
            throw std::invalid_argument("term order precedence is not a permutation");
        seen[v] = true;
    }
}

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    return kind == Kind::GrevLex ? grevlex_cmp(a, b, precedence) : lex_cmp(a, b, precedence);
}

int ModuleOrder::cmp(const Monomial& ma, int pa, const Monomial& mb, int pb) const {
    switch (strategy) {
        case Strategy::PositionOverTerm:
            if (pa != pb) return pa < pb ? 1 : -1;
            return base.cmp(ma, mb);
        case Strategy::TermOverPosition: {
            int c = base.cmp(ma, mb);
            if (c) return c;
            if (pa != pb) return pa < pb ? 1 : -1;
            return 0;
        }
        case Strategy::Schreyer: {
            const ModuleTerm& la = induced.at(pa);
            const ModuleTerm& lb = induced.at(pb);
            int c = base.cmp(mono_mul(ma, la.mono), mono_mul(mb, lb.mono));
            if (c) return c;
            if (pa != pb) return pa < pb ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

std::string mono_to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i);
        if (m.exp[i] > 1) {
            s += '^';
            s += std::to_string(m.exp[i]);
        }
    }
    return s.empty() ? std::string("1") : s;
}

}  // namespace jacsyz

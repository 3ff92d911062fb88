#pragma once

#include <array>
#include <cassert>
#include <set>
#include <type_traits>

#include "jacsyz/module.hpp"

namespace jacsyz {

template <class F>
struct GroebnerBasis {
    FreeModule<F> mod{};
    ModuleOrder order{};
    bool reduced = false;
    std::vector<ModuleElement<F>> gens;
};

namespace gbdetail {

template <class F>
struct GBTerm {
    Monomial mono;
    int pos;
    typename F::Elem c;
};

// strictly descending under the run's ModuleOrder
template <class F>
using TV = std::vector<GBTerm<F>>;

template <class F>
TV<F> flatten(const ModuleElement<F>& v, const ModuleOrder& ord) {
    TV<F> out;
    for (int i = 0; i < v.mod.rank; ++i)
        for (const auto& t : v.comps[i].terms()) out.push_back({t.mono, i, t.coeff});
    std::sort(out.begin(), out.end(), [&](const GBTerm<F>& a, const GBTerm<F>& b) {
        return ord.cmp(a.mono, a.pos, b.mono, b.pos) > 0;
    });
    return out;
}

template <class F>
ModuleElement<F> unflatten(const FreeModule<F>& mod, const TV<F>& v) {
    std::vector<std::vector<typename Polynomial<F>::Term>> per(mod.rank);
    for (const auto& t : v) per.at(t.pos).push_back({t.mono, t.c});
    std::vector<Polynomial<F>> comps;
    comps.reserve(mod.rank);
    for (int i = 0; i < mod.rank; ++i)
        comps.push_back(Polynomial<F>::from_terms(mod.ring, std::move(per[i])));
    return ModuleElement<F>::make(mod, std::move(comps));
}

// c * x^m * v
template <class F>
TV<F> scale_shift(const F& K, const TV<F>& v, const Monomial& m, const typename F::Elem& c) {
    TV<F> out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back({mono_mul(t.mono, m), t.pos, K.mul(t.c, c)});
    return out;
}

// dst - c * x^m * src, both sorted descending under ord
template <class F>
TV<F> axpy_sub(const F& K, const ModuleOrder& ord, const TV<F>& dst, const typename F::Elem& c,
               const Monomial& m, const TV<F>& src) {
    TV<F> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size()) {
            out.push_back(dst[i++]);
            continue;
        }
        Monomial sm = mono_mul(src[j].mono, m);
        if (i == dst.size()) {
            auto nc = K.neg(K.mul(c, src[j].c));
            if (!K.is_zero(nc)) out.push_back({std::move(sm), src[j].pos, std::move(nc)});
            ++j;
            continue;
        }
        int cc = ord.cmp(dst[i].mono, dst[i].pos, sm, src[j].pos);
        if (cc > 0) {
            out.push_back(dst[i++]);
        } else if (cc < 0) {
            auto nc = K.neg(K.mul(c, src[j].c));
            if (!K.is_zero(nc)) out.push_back({std::move(sm), src[j].pos, std::move(nc)});
            ++j;
        } else {
            auto nc = K.sub(dst[i].c, K.mul(c, src[j].c));
            if (!K.is_zero(nc)) out.push_back({dst[i].mono, dst[i].pos, std::move(nc)});
            ++i, ++j;
        }
    }
    return out;
}

// Scale to the canonical representative: monic over a prime field; primitive
// integer coefficients with positive leading coefficient over Q. When a tail
// is tracked the same scale is applied to both parts.
template <class F>
void normalize_joint(const F& K, TV<F>& g, TV<F>* tail) {
    if (g.empty() && (!tail || tail->empty())) return;
    if constexpr (std::is_same_v<F, Rationals>) {
        mpz_class num_gcd = 0, den_lcm = 1;
        auto scan = [&](const TV<F>& v) {
            for (const auto& t : v) {
                mpz_class n = t.c.get_num();
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
                mpz_class d = t.c.get_den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            }
        };
        scan(g);
        if (tail) scan(*tail);
        mpq_class scale(den_lcm, num_gcd == 0 ? mpz_class(1) : num_gcd);
        scale.canonicalize();
        const mpq_class& lead = g.empty() ? tail->front().c : g.front().c;
        if (lead * scale < 0) scale = -scale;
        for (auto& t : g) t.c = t.c * scale;
        if (tail)
            for (auto& t : *tail) t.c = t.c * scale;
    } else {
        auto lead = g.empty() ? tail->front().c : g.front().c;
        auto s = K.inv(lead);
        for (auto& t : g) t.c = K.mul(t.c, s);
        if (tail)
            for (auto& t : *tail) t.c = K.mul(t.c, s);
    }
}

template <class F>
struct BasisEntry {
    TV<F> g;     // nonzero, normalized
    TV<F> tail;  // expression of g in the original generators (track mode)
};

// Fully reduce v (every term, not just the lead) by the basis. Deterministic:
// the reducer is the lowest-index entry whose leading term divides. When
// tracking, tail is transformed alongside under tord.
template <class F>
void reduce_full(const F& K, const ModuleOrder& ord, TV<F>& v,
                 const std::vector<BasisEntry<F>>& basis, TV<F>* tail = nullptr,
                 const ModuleOrder* tord = nullptr) {
    size_t i = 0;
    while (i < v.size()) {
        bool hit = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const auto& b = basis[k].g;
            if (b.front().pos == v[i].pos && mono_divides(b.front().mono, v[i].mono)) {
                auto q = K.div(v[i].c, b.front().c);
                Monomial m = mono_div(v[i].mono, b.front().mono);
                v = axpy_sub(K, ord, v, q, m, b);
                if (tail) *tail = axpy_sub(K, *tord, *tail, q, m, basis[k].tail);
                hit = true;
                break;
            }
        }
        if (!hit) ++i;
    }
}

// Buchberger engine over a graded free module. With track=true every
// reduction is mirrored on transformation vectors over the input generators,
// zero reductions are collected as syzygies, and the pair criteria are
// disabled so that the collected set provably generates.
template <class F>
class GBEngine {
public:
    GBEngine(FreeModule<F> mod, ModuleOrder ord, bool track, bool criteria)
        : mod_(std::move(mod)), ord_(std::move(ord)), K_(mod_.ring.field), track_(track),
          criteria_(criteria) {}

    void set_tail_module(FreeModule<F> tm, ModuleOrder tord) {
        tailmod_ = std::move(tm);
        tail_ord_ = std::move(tord);
    }

    const FreeModule<F>& mod() const { return mod_; }
    const std::vector<BasisEntry<F>>& basis() const { return basis_; }
    const std::vector<TV<F>>& collected_syzygies() const { return syz_; }

    // flatten + validate a generator; returns empty vector for the zero element
    TV<F> prepare(const ModuleElement<F>& v) const {
        if (v.mod != mod_) throw std::invalid_argument("module mismatch");
        if (!is_homogeneous_element(v)) throw std::invalid_argument("non-homogeneous generator");
        return flatten(v, ord_);
    }

    // add a generator (track mode: tail = e_slot) without processing pairs
    void add_generator(const ModuleElement<F>& v, int tail_slot = -1) {
        TV<F> g = prepare(v);
        if (g.empty()) return;
        TV<F> tail;
        if (track_) {
            assert(tail_slot >= 0);
            tail.push_back({Monomial::one(mod_.ring.nvars), tail_slot, K_.one()});
        }
        normalize_joint(K_, g, track_ ? &tail : nullptr);
        append_entry(std::move(g), std::move(tail));
    }

    void saturate() {
        while (!pairs_.empty()) {
            auto it = pairs_.begin();
            auto [deg, i, j] = *it;
            pairs_.erase(it);
            step(i, j);
        }
    }

    // plain mode: returns false (and changes nothing) if v is already in the
    // submodule; otherwise adds it and re-saturates
    bool add_if_new(const ModuleElement<F>& v) {
        TV<F> g = prepare(v);
        reduce_full(K_, ord_, g, basis_);
        if (g.empty()) return false;
        normalize_joint<F>(K_, g, nullptr);
        append_entry(std::move(g), {});
        saturate();
        return true;
    }

    TV<F> normal_form_vec(TV<F> v) const {
        reduce_full(K_, ord_, v, basis_);
        return v;
    }

    // track mode: divide v with tail seeded at e_slot; v must reduce to zero
    TV<F> tracked_divide(const ModuleElement<F>& v, int slot) {
        TV<F> g = prepare(v);
        TV<F> tail;
        tail.push_back({Monomial::one(mod_.ring.nvars), slot, K_.one()});
        reduce_full(K_, ord_, g, basis_, &tail, &tail_ord_);
        if (!g.empty()) throw std::logic_error("generator does not reduce to zero against its own basis");
        if (!tail.empty()) normalize_joint(K_, g, &tail);
        return tail;
    }

    // minimal + tail-reduced + monic basis, sorted ascending by leading term
    std::vector<ModuleElement<F>> reduced_basis() const {
        std::vector<int> idx(basis_.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            const auto& la = basis_[a].g.front();
            const auto& lb = basis_[b].g.front();
            int c = ord_.cmp(la.mono, la.pos, lb.mono, lb.pos);
            if (c) return c < 0;
            return a < b;
        });
        std::vector<int> kept;
        for (int i : idx) {
            const auto& li = basis_[i].g.front();
            bool red = false;
            for (int k : kept) {
                const auto& lk = basis_[k].g.front();
                if (lk.pos == li.pos && mono_divides(lk.mono, li.mono)) {
                    red = true;
                    break;
                }
            }
            if (!red) kept.push_back(i);
        }
        // interreduce tails
        std::vector<BasisEntry<F>> out;
        for (int i : kept) out.push_back({basis_[i].g, {}});
        for (size_t a = 0; a < out.size(); ++a) {
            std::vector<BasisEntry<F>> others;
            for (size_t b = 0; b < out.size(); ++b)
                if (b != a) others.push_back(out[b]);
            reduce_full(K_, ord_, out[a].g, others);
        }
        std::vector<ModuleElement<F>> gens;
        for (auto& e : out) {
            auto s = K_.inv(e.g.front().c);
            for (auto& t : e.g) t.c = K_.mul(t.c, s);
            gens.push_back(unflatten(mod_, e.g));
        }
        return gens;
    }

private:
    FreeModule<F> mod_;
    ModuleOrder ord_;
    F K_;
    bool track_, criteria_;
    FreeModule<F> tailmod_{};
    ModuleOrder tail_ord_{};
    std::vector<BasisEntry<F>> basis_;
    std::set<std::array<int, 3>> pairs_;  // (graded degree, i, j), i < j
    std::vector<TV<F>> syz_;

    int pair_degree(const Monomial& lcm, int pos) const { return lcm.degree() + mod_.shifts[pos]; }

    void append_entry(TV<F> g, TV<F> tail) {
        int t = static_cast<int>(basis_.size());
        basis_.push_back({std::move(g), std::move(tail)});
        update_pairs(t);
    }

    void update_pairs(int t) {
        const auto& lt_t = basis_[t].g.front();
        if (criteria_) {
            // chain criterion on already-queued pairs
            std::vector<std::array<int, 3>> drop;
            for (const auto& pr : pairs_) {
                int i = pr[1], j = pr[2];
                const auto& li = basis_[i].g.front();
                const auto& lj = basis_[j].g.front();
                if (li.pos != lt_t.pos) continue;
                Monomial lij = mono_lcm(li.mono, lj.mono);
                if (!mono_divides(lt_t.mono, lij)) continue;
                if (mono_lcm(li.mono, lt_t.mono) == lij) continue;
                if (mono_lcm(lj.mono, lt_t.mono) == lij) continue;
                drop.push_back(pr);
            }
            for (const auto& pr : drop) pairs_.erase(pr);
        }
        std::vector<std::pair<int, Monomial>> cands;
        for (int i = 0; i < t; ++i) {
            const auto& li = basis_[i].g.front();
            if (li.pos != lt_t.pos) continue;
            cands.push_back({i, mono_lcm(li.mono, lt_t.mono)});
        }
        if (criteria_) {
            std::vector<bool> dead(cands.size(), false);
            for (size_t a = 0; a < cands.size(); ++a) {
                if (dead[a]) continue;
                for (size_t b = 0; b < cands.size(); ++b) {
                    if (a == b || dead[b]) continue;
                    if (cands[b].second == cands[a].second) {
                        if (b < a) { dead[a] = true; break; }
                        continue;
                    }
                    if (mono_divides(cands[b].second, cands[a].second)) {
                        dead[a] = true;
                        break;
                    }
                }
            }
            std::vector<std::pair<int, Monomial>> alive;
            for (size_t a = 0; a < cands.size(); ++a) {
                if (dead[a]) continue;
                // product criterion, valid for ideals only
                if (mod_.rank == 1 &&
                    mono_coprime(basis_[cands[a].first].g.front().mono, lt_t.mono))
                    continue;
                alive.push_back(cands[a]);
            }
            cands = std::move(alive);
        }
        for (const auto& [i, lcm] : cands)
            pairs_.insert({pair_degree(lcm, lt_t.pos), i, t});
    }

    void step(int i, int j) {
        const auto& gi = basis_[i].g;
        const auto& gj = basis_[j].g;
        Monomial lcm = mono_lcm(gi.front().mono, gj.front().mono);
        Monomial ui = mono_div(lcm, gi.front().mono);
        Monomial uj = mono_div(lcm, gj.front().mono);
        TV<F> h = scale_shift(K_, gi, ui, K_.inv(gi.front().c));
        h = axpy_sub(K_, ord_, h, K_.inv(gj.front().c), uj, gj);
        TV<F> tail;
        if (track_) {
            tail = scale_shift(K_, basis_[i].tail, ui, K_.inv(gi.front().c));
            tail = axpy_sub(K_, tail_ord_, tail, K_.inv(gj.front().c), uj, basis_[j].tail);
        }
        reduce_full(K_, ord_, h, basis_, track_ ? &tail : nullptr, track_ ? &tail_ord_ : nullptr);
        if (h.empty()) {
            if (track_ && !tail.empty()) {
                normalize_joint(K_, h, &tail);
                syz_.push_back(std::move(tail));
            }
            return;
        }
        normalize_joint(K_, h, track_ ? &tail : nullptr);
        append_entry(std::move(h), std::move(tail));
    }
};

}  // namespace gbdetail

// Reduced Groebner basis of the submodule generated by gens.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<ModuleElement<F>>& gens, const ModuleOrder& order) {
    if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
    const FreeModule<F>& mod = gens.front().mod;
    order.base.validate(mod.ring.nvars);
    gbdetail::GBEngine<F> eng(mod, order, /*track=*/false, /*criteria=*/true);
    for (const auto& g : gens) eng.add_generator(g);
    eng.saturate();
    return GroebnerBasis<F>{mod, order, true, eng.reduced_basis()};
}

template <class F>
ModuleElement<F> normal_form(const ModuleElement<F>& v, const GroebnerBasis<F>& gb) {
    if (v.mod != gb.mod) throw std::invalid_argument("module mismatch");
    const F& K = v.mod.ring.field;
    std::vector<gbdetail::BasisEntry<F>> basis;
    for (const auto& g : gb.gens) basis.push_back({gbdetail::flatten(g, gb.order), {}});
    auto vec = gbdetail::flatten(v, gb.order);
    gbdetail::reduce_full(K, gb.order, vec, basis);
    return gbdetail::unflatten(gb.mod, vec);
}

template <class F>
bool membership(const ModuleElement<F>& v, const GroebnerBasis<F>& gb) {
    return normal_form(v, gb).is_zero();
}

// True iff the only common zero of the (homogeneous, rank-1) ideal is the
// origin: the leading-term ideal contains a pure power of every variable.
template <class F>
bool is_zero_dimensional(const GroebnerBasis<F>& gb) {
    if (gb.mod.rank != 1) throw std::invalid_argument("zero-dimensionality test expects an ideal");
    int n = gb.mod.ring.nvars;
    std::vector<gbdetail::TV<F>> lts;
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : gb.gens) {
            auto v = gbdetail::flatten(g, gb.order);
            if (v.empty()) continue;
            const Monomial& m = v.front().mono;
            bool pure = true;
            for (int k = 0; k < n; ++k)
                if (k != i && m.exp[k] != 0) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

// Generators of the full syzygy module {A : sum A_i gens_i = 0} of the given
// homogeneous generators, living in S^r with shifts = graded degrees of gens.
// Not necessarily minimal.
template <class F>
std::vector<ModuleElement<F>> syzygies(const std::vector<ModuleElement<F>>& gens,
                                       const TermOrder& base = TermOrder::grevlex()) {
    using namespace gbdetail;
    if (gens.empty()) return {};
    const FreeModule<F>& mod = gens.front().mod;
    const Ring<F>& R = mod.ring;
    base.validate(R.nvars);
    const F& K = R.field;
    int r = static_cast<int>(gens.size());

    ModuleOrder ord = ModuleOrder::top(base);
    std::vector<int> shifts(r, 0);
    std::vector<ModuleTerm> lead(r, ModuleTerm{Monomial::one(R.nvars), 0});
    std::vector<bool> zero(r, false);
    for (int i = 0; i < r; ++i) {
        if (gens[i].mod != mod) throw std::invalid_argument("mixed modules");
        if (gens[i].is_zero()) {
            zero[i] = true;
            continue;
        }
        auto d = graded_degree(gens[i]);
        if (!d) throw std::invalid_argument("non-homogeneous generator");
        shifts[i] = *d;
        auto fv = flatten(gens[i], ord);
        lead[i] = ModuleTerm{fv.front().mono, fv.front().pos};
    }
    FreeModule<F> tailmod{R, r, shifts};
    ModuleOrder tord = ModuleOrder::schreyer(base, lead);

    GBEngine<F> eng(mod, ord, /*track=*/true, /*criteria=*/false);
    eng.set_tail_module(tailmod, tord);
    for (int i = 0; i < r; ++i)
        if (!zero[i]) eng.add_generator(gens[i], i);
    eng.saturate();

    std::vector<ModuleElement<F>> out;
    for (const auto& s : eng.collected_syzygies()) out.push_back(unflatten(tailmod, s));
    for (int i = 0; i < r; ++i) {
        if (zero[i]) {
            out.push_back(ModuleElement<F>::unit(tailmod, i, Polynomial<F>::constant(R, K.one())));
            continue;
        }
        auto row = eng.tracked_divide(gens[i], i);
        if (!row.empty()) out.push_back(unflatten(tailmod, row));
    }
    // deduplicate (normalization makes +/- copies identical)
    std::sort(out.begin(), out.end(), [](const ModuleElement<F>& a, const ModuleElement<F>& b) {
        return to_string(a) < to_string(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const ModuleElement<F>& a, const ModuleElement<F>& b) {
                         return graded_degree(a).value_or(0) < graded_degree(b).value_or(0);
                     });
    return out;
}

// re-check, against the finished basis, that every S-pair reduces to zero
template <class F>
bool all_spairs_reduce(const GroebnerBasis<F>& gb) {
    using namespace gbdetail;
    const F& K = gb.mod.ring.field;
    std::vector<BasisEntry<F>> basis;
    for (const auto& g : gb.gens) basis.push_back({flatten(g, gb.order), {}});
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const auto& gi = basis[i].g;
            const auto& gj = basis[j].g;
            if (gi.front().pos != gj.front().pos) continue;
            Monomial lcm = mono_lcm(gi.front().mono, gj.front().mono);
            TV<F> h = scale_shift(K, gi, mono_div(lcm, gi.front().mono), K.inv(gi.front().c));
            h = axpy_sub(K, gb.order, h, K.inv(gj.front().c), mono_div(lcm, gj.front().mono), gj);
            reduce_full(K, gb.order, h, basis);
            if (!h.empty()) return false;
        }
    }
    return true;
}

}  // namespace jacsyz

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace jacsyz;

namespace {
const Rationals Q;
Ring<Rationals> R3() { return Ring<Rationals>::make(3, Q); }
PolyQ P(const std::string& s, int nvars = 3) {
    return parse_poly<Rationals>(s, Ring<Rationals>::make(nvars, Q));
}
std::vector<ModuleElement<Rationals>> ideal(std::initializer_list<const char*> polys) {
    std::vector<ModuleElement<Rationals>> out;
    for (const char* s : polys) out.push_back(ideal_element(P(s)));
    return out;
}
const ModuleOrder kGrevlex = ModuleOrder::top(TermOrder::grevlex());
}  // namespace

TEST_CASE("buchberger on monomial-ish ideals") {
    auto gb = buchberger(ideal({"x0", "x1"}), kGrevlex);
    CHECK(gb.reduced);
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0].comps[0] == P("x1"));
    CHECK(gb.gens[1].comps[0] == P("x0"));
    CHECK(all_spairs_reduce(gb));
}

TEST_CASE("buchberger finds the one new S-polynomial") {
    // x1*(x0^2-x1^2) - x0*(x0*x1) = -x1^3
    auto gb = buchberger(ideal({"x0^2-x1^2", "x0*x1"}), kGrevlex);
    REQUIRE(gb.gens.size() == 3);
    std::vector<PolyQ> want = {P("x0*x1"), P("x0^2-x1^2"), P("x1^3")};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : gb.gens)
            if (g.comps[0] == w) found = true;
        CHECK(found);
    }
    CHECK(all_spairs_reduce(gb));
    CHECK(membership(ideal_element(P("x1^3")), gb));
    CHECK(normal_form(ideal_element(P("x0^2*x1")), gb).is_zero());
}

TEST_CASE("buchberger input validation") {
    CHECK_THROWS_AS(buchberger(ideal({"x0^2+x1"}), kGrevlex), std::invalid_argument);
    auto a = ideal_element(P("x0", 3));
    auto b = ideal_element(P("x0", 4));
    CHECK_THROWS_AS(buchberger(std::vector<ModuleElement<Rationals>>{a, b}, kGrevlex),
                    std::invalid_argument);
}

TEST_CASE("normal form") {
    auto gb = buchberger(ideal({"x0"}), kGrevlex);
    CHECK(normal_form(ideal_element(P("x0^2")), gb).is_zero());
    CHECK(normal_form(ideal_element(P("x1^3+x2")), gb).comps[0] == P("x1^3+x2"));

    // idempotence on random inputs
    std::mt19937_64 rng(21);
    auto R = R3();
    auto gb2 = buchberger(ideal({"x0^2-x1^2", "x0*x1"}), kGrevlex);
    for (int i = 0; i < 25; ++i) {
        auto v = ideal_element(testutil::random_poly(rng, R, 5, 6));
        auto r1 = normal_form(v, gb2);
        CHECK(normal_form(r1, gb2) == r1);
        // v - nf(v) is in the submodule
        CHECK(membership(v - r1, gb2));
    }
}

TEST_CASE("membership") {
    auto gb = buchberger(ideal({"x0", "x1"}), kGrevlex);
    CHECK(membership(ideal_element(P("x0+x1")), gb));
    CHECK_FALSE(membership(ideal_element(P("x2")), gb));
}

TEST_CASE("zero dimensionality") {
    CHECK(is_zero_dimensional(buchberger(ideal({"x0", "x1", "x2"}), kGrevlex)));
    CHECK_FALSE(is_zero_dimensional(buchberger(ideal({"x0", "x1"}), kGrevlex)));
    CHECK(is_zero_dimensional(buchberger(ideal({"1"}), kGrevlex)));

    // Fermat g'_i: e*I + all-ones is invertible (det 20 for e=2, n=2), so the
    // only common zero is trivial and every variable shows up as a pure power
    auto m = builtin_fermat(Q, 2, 2);
    std::vector<ModuleElement<Rationals>> gp;
    for (int i = 0; i <= 2; ++i) gp.push_back(ideal_element(gprime(m, i)));
    long long det = 0;
    {
        long long e = 2, a[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] = (i == j ? e : 0) + 1;
        det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
              a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }
    CHECK(det == 20);
    CHECK(is_zero_dimensional(buchberger(gp, kGrevlex)));
}

TEST_CASE("syzygies of a regular sequence are Koszul") {
    auto gens = ideal({"x0", "x1"});
    auto syz = syzygies(gens);
    REQUIRE(syz.size() == 1);
    CHECK(syz[0].comps[0] == P("x1"));
    CHECK(syz[0].comps[1] == -P("x0"));
    CHECK(syz[0].mod.shifts == std::vector<int>{1, 1});

    // three Fermat g': syzygies generate the same submodule as the Koszul
    // elements rho_ij
    auto m = builtin_fermat(Q, 2, 2);
    std::vector<ModuleElement<Rationals>> gp;
    for (int i = 0; i <= 2; ++i) gp.push_back(ideal_element(gprime(m, i)));
    auto syz2 = syzygies(gp);
    FreeModule<Rationals> smod = syz2.front().mod;
    std::vector<ModuleElement<Rationals>> koszul;
    for (int i = 0; i <= 2; ++i)
        for (int j = i + 1; j <= 2; ++j) {
            auto v = ModuleElement<Rationals>::zero(smod);
            v.comps[i] = gp[j].comps[0];
            v.comps[j] = -gp[i].comps[0];
            koszul.push_back(v);
        }
    auto gb_syz = buchberger(syz2, kGrevlex);
    auto gb_kos = buchberger(koszul, kGrevlex);
    for (const auto& k : koszul) CHECK(membership(k, gb_syz));
    for (const auto& s : syz2) CHECK(membership(s, gb_kos));
}

TEST_CASE("syzygy soundness and completeness on random generator sets") {
    std::mt19937_64 rng(1234);
    PrimeField Fp(2147483647ull);
    OracleOptions oo;
    oo.degree_cap = 24;
    for (int trial = 0; trial < 12; ++trial) {
        int nvars = 3 + static_cast<int>(rng() % 2);
        auto R = Ring<PrimeField>::make(nvars, Fp);
        int ngens = 2 + static_cast<int>(rng() % 3);
        std::vector<ModuleElement<PrimeField>> gens;
        int dmin = 100;
        for (int i = 0; i < ngens; ++i) {
            int d = 1 + static_cast<int>(rng() % 3);
            dmin = std::min(dmin, d);
            gens.push_back(ideal_element(testutil::random_homogeneous_nonzero(rng, R, d, 4)));
        }
        auto syz = syzygies(gens);
        int maxsyz = 0;
        for (const auto& s : syz) {
            // soundness: exact annihilation
            Polynomial<PrimeField> acc(R);
            for (size_t i = 0; i < gens.size(); ++i)
                acc = acc + s.comps[i] * gens[i].comps[0];
            CHECK(acc.is_zero());
            maxsyz = std::max(maxsyz, *graded_degree(s));
        }
        // completeness: per-degree dimensions match the dense kernel oracle
        int cap = std::min(maxsyz + 2, 12);
        for (int tau = dmin; tau <= cap; ++tau) {
            long long kd = graded_kernel_dimension(gens, tau - dmin, oo);
            long long sd = syz.empty() ? 0 : graded_piece_dimension(syz, tau, oo);
            CHECK(kd == sd);
        }
    }
    // a couple of exact-rational runs as well
    for (int trial = 0; trial < 3; ++trial) {
        auto R = R3();
        std::vector<ModuleElement<Rationals>> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(ideal_element(testutil::random_homogeneous_nonzero(rng, R, 2, 4)));
        auto syz = syzygies(gens);
        for (int tau = 2; tau <= 7; ++tau) {
            long long kd = graded_kernel_dimension(gens, tau - 2, oo);
            long long sd = syz.empty() ? 0 : graded_piece_dimension(syz, tau, oo);
            CHECK(kd == sd);
        }
    }
}

TEST_CASE("module Groebner bases and grading") {
    // submodule of S(-1)^2 generated by module elements
    auto R = R3();
    auto mod = FreeModule<Rationals>::make(R, {1, 1});
    std::vector<ModuleElement<Rationals>> gens = {
        ModuleElement<Rationals>::make(mod, {P("x0"), P("x1")}),
        ModuleElement<Rationals>::make(mod, {P("x1"), P("x0")}),
        ModuleElement<Rationals>::make(mod, {P("x2"), P("x2")}),
    };
    auto gb = buchberger(gens, kGrevlex);
    for (const auto& g : gb.gens) CHECK(is_homogeneous_element(g));
    CHECK(all_spairs_reduce(gb));
    for (const auto& g : gens) CHECK(membership(g, gb));
    // POT order gives the same submodule
    auto gb2 = buchberger(gens, ModuleOrder::pot(TermOrder::grevlex()));
    for (const auto& g : gb.gens) CHECK(membership(g, gb2));
    for (const auto& g : gb2.gens) CHECK(membership(g, gb));
}

TEST_CASE("grevlex and lex agree on ideal membership") {
    auto gens = ideal({"x0^2-x1*x2", "x0*x1-x2^2"});
    auto gbG = buchberger(gens, ModuleOrder::top(TermOrder::grevlex()));
    auto gbL = buchberger(gens, ModuleOrder::top(TermOrder::lex()));
    std::mt19937_64 rng(77);
    auto R = R3();
    for (int i = 0; i < 15; ++i) {
        auto a = testutil::random_homogeneous(rng, R, 2, 3);
        auto b = testutil::random_homogeneous(rng, R, 2, 3);
        auto v = ideal_element(a * P("x0^2-x1*x2") + b * P("x0*x1-x2^2"));
        if (v.is_zero()) continue;
        CHECK(membership(v, gbG));
        CHECK(membership(v, gbL));
    }
    for (const auto& g : gbG.gens) CHECK(membership(g, gbL));
    for (const auto& g : gbL.gens) CHECK(membership(g, gbG));
}

TEST_CASE("determinism") {
    auto gens = ideal({"x0^2-x1^2", "x0*x1", "x1^3-x2^3"});
    auto a = buchberger(gens, kGrevlex);
    auto b = buchberger(gens, kGrevlex);
    REQUIRE(a.gens.size() == b.gens.size());
    for (size_t i = 0; i < a.gens.size(); ++i) CHECK(a.gens[i] == b.gens[i]);
    auto s1 = syzygies(gens);
    auto s2 = syzygies(gens);
    REQUIRE(s1.size() == s2.size());
    for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
}

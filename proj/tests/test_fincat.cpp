#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjforge/fincat.hpp"
#include "helpers.hpp"

using namespace adjforge::fincat;
using namespace testhelpers;

TEST_CASE("poset categories validate") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : all_posets(n)) {
            auto pc = poset_category(p);
            CHECK(validate_category(*pc.cat).ok());
        }
}

TEST_CASE("broken associativity is reported as a law violation") {
    // one object, three morphisms: id, a, b with a*a = b, everything else a
    auto c = std::make_shared<FinCategory>();
    c->n_objects = 1;
    c->mor_src = {0, 0, 0};
    c->mor_dst = {0, 0, 0};
    c->identity = {0};
    c->table = {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}};  // a(aa)=ab=1 vs (aa)a=ba=1... tweak
    c->table = {{0, 1, 2}, {1, 2, 2}, {2, 1, 1}};
    auto v = validate_category(*c);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.malformed());
}

TEST_CASE("dangling table entries are malformed, not law violations") {
    auto c = std::make_shared<FinCategory>();
    c->n_objects = 2;
    c->mor_src = {0, 1, 0};
    c->mor_dst = {0, 1, 1};
    c->identity = {0, 1};
    c->table = {{0, kNone, kNone}, {kNone, 1, kNone}, {2, kNone, kNone}};
    c->table[2][0] = 2;
    c->table[1][2] = 2;
    c->table[0][1] = 0;  // non-composable pair given a composite
    auto v = validate_category(*c);
    CHECK(v.malformed());
}

TEST_CASE("morphism budget guard") {
    Poset chain;
    chain.n = 5;
    chain.leq.assign(5, std::vector<bool>(5, false));
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) chain.leq[a][b] = true;
    auto pc = poset_category(chain);
    CHECK_THROWS_AS((void)validate_category(*pc.cat, 3), BudgetExceeded);
}

TEST_CASE("classification agrees with brute-force oracle on posets") {
    for (const auto& p : all_posets(3)) {
        auto pc = poset_category(p);
        for (Mor m = 0; m < pc.cat->mor_count(); ++m) {
            auto flags = classify_morphism(*pc.cat, m);
            CHECK(flags.mono == oracle_mono(*pc.cat, m));
            CHECK(flags.epi == oracle_epi(*pc.cat, m));
            // thin categories: iso only for identities (antisymmetry)
            bool ident = pc.cat->identity[pc.cat->mor_src[m]] == m;
            CHECK(flags.iso == ident);
        }
    }
}

TEST_CASE("split and extremal flags in a retract category") {
    // X retract of Y: s: X->Y, r: Y->X, rs = 1_X, sr = e idempotent
    auto c = std::make_shared<FinCategory>();
    c->n_objects = 2;  // X=0, Y=1
    // morphisms: 1_X=0, 1_Y=1, s=2 (X->Y), r=3 (Y->X), e=4 (Y->Y)
    c->mor_src = {0, 1, 0, 1, 1};
    c->mor_dst = {0, 1, 1, 0, 1};
    c->identity = {0, 1};
    auto t = [&](Mor g, Mor f, Mor gf) { c->table[g][f] = gf; };
    c->table.assign(5, std::vector<Mor>(5, kNone));
    for (Mor m = 0; m < 5; ++m) {
        c->table[m][c->identity[c->mor_src[m]]] = m;
        c->table[c->identity[c->mor_dst[m]]][m] = m;
    }
    t(3, 2, 0);  // r s = 1_X
    t(2, 3, 4);  // s r = e
    t(4, 2, 2);  // e s = s
    t(3, 4, 3);  // r e = r
    t(4, 4, 4);  // e e = e
    REQUIRE(validate_category(*c).ok());
    auto s_flags = classify_morphism(*c, 2);
    auto r_flags = classify_morphism(*c, 3);
    auto e_flags = classify_morphism(*c, 4);
    CHECK(s_flags.coretraction);
    CHECK(s_flags.mono);
    CHECK_FALSE(s_flags.iso);
    CHECK(r_flags.retraction);
    CHECK(r_flags.epi);
    CHECK_FALSE(r_flags.iso);
    CHECK_FALSE(e_flags.mono);
    CHECK_FALSE(e_flags.epi);
    // split epi is extremal epi, split mono is extremal mono
    CHECK(r_flags.extremal_epi);
    CHECK(s_flags.extremal_mono);
    CHECK(inverse_of(*c, 2) == std::nullopt);
    CHECK(inverse_of(*c, 0) == Mor{0});
}

TEST_CASE("functor and nattrans validation") {
    Poset p2;
    p2.n = 2;
    p2.leq = {{true, true}, {false, true}};
    auto pc = poset_category(p2);
    auto id = identity_functor(pc.cat);
    CHECK(validate_functor(id).ok());
    // collapse everything to the top element
    FinFunctor top{pc.cat, pc.cat, {1, 1}, {}};
    for (Mor m = 0; m < pc.cat->mor_count(); ++m) top.mor_map.push_back(pc.arrow[1][1]);
    CHECK(validate_functor(top).ok());
    NatTrans up{id, top, {pc.arrow[0][1], pc.arrow[1][1]}};
    CHECK(validate_nattrans(up).ok());
    NatTrans bad{id, top, {pc.arrow[0][0], pc.arrow[1][1]}};
    CHECK_FALSE(validate_nattrans(bad).ok());
}

TEST_CASE("whiskering and vertical composition laws") {
    Poset p;
    p.n = 3;
    p.leq = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    auto pc = poset_category(p);
    auto id = identity_functor(pc.cat);
    // closure to the top
    FinFunctor top{pc.cat, pc.cat, {2, 2, 2}, {}};
    for (Mor m = 0; m < pc.cat->mor_count(); ++m) top.mor_map.push_back(pc.arrow[2][2]);
    NatTrans alpha{id, top, {pc.arrow[0][2], pc.arrow[1][2], pc.arrow[2][2]}};
    REQUIRE(validate_nattrans(alpha).ok());
    auto l = whisker_left(top, alpha);
    CHECK(validate_nattrans(l).ok());
    auto r = whisker_right(alpha, top);
    CHECK(validate_nattrans(r).ok());
    auto v = vertical_compose(l, alpha);
    CHECK(validate_nattrans(v).ok());
    CHECK(nattrans_equal(vertical_compose(identity_nattrans(top), alpha), alpha));
}

TEST_CASE("op category is an involution and swaps mono with epi") {
    for (const auto& p : all_posets(3)) {
        auto pc = poset_category(p);
        auto op = op_category(pc.cat);
        CHECK(validate_category(*op).ok());
        auto opop = op_category(op);
        CHECK(opop->table == pc.cat->table);
        CHECK(opop->mor_src == pc.cat->mor_src);
        for (Mor m = 0; m < pc.cat->mor_count(); ++m) {
            CHECK(is_mono(*pc.cat, m) == is_epi(*op, m));
            CHECK(is_epi(*pc.cat, m) == is_mono(*op, m));
            CHECK(is_iso(*pc.cat, m) == is_iso(*op, m));
        }
    }
}

TEST_CASE("hom sets partition the morphisms") {
    for (const auto& p : all_posets(3)) {
        auto pc = poset_category(p);
        int total = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) total += int(pc.cat->hom(a, b).size());
        CHECK(total == pc.cat->mor_count());
    }
}

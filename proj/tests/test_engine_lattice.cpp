#include "doctest.h"

#include "duality/engine.hpp"
#include "fixtures.hpp"
#include "sweep.hpp"

using namespace duality;

namespace {

struct Bool4 {
    LatticeBackend bk = fixture::bool4_backend();
    Elem bot = bk.element("bot"), x = bk.element("x"), y = bk.element("y"), top = bk.element("top");
};

DualitySpec spec(const OrderBackend& bk, ElemSet a, ElemSet b)
{
    DualitySpec d{std::move(a), std::move(b), {}};
    d.status = is_finite_duality(bk, d.left, d.right);
    return d;
}

void require_clean(const sweep::Tally& t, const char* what)
{
    INFO(what);
    for (const auto& f : t.failures)
        INFO(f);
    CHECK(t.checks > 0);
    CHECK(t.ok());
}

} // namespace

TEST_CASE("duality pairs in Boolean 4 and a chain")
{
    Bool4 b;
    auto v = is_duality_pair(b.bk, b.x, b.y);
    CHECK(v.verified());
    CHECK(v.exhaustive);
    auto w = is_duality_pair(b.bk, b.top, b.y);
    CHECK(w.kind == VerdictKind::Refuted);
    CHECK(w.witness == b.x);

    CHECK(right_dual_of(b.bk, b.x) == b.y);
    CHECK(right_dual_of(b.bk, b.top) == std::nullopt);

    LatticeBackend chain(fixture::chain(3));
    CHECK(right_dual_of(chain, chain.element("2")) == chain.element("1"));
}

TEST_CASE("finite dualities in Boolean 4")
{
    Bool4 b;
    CHECK(is_finite_duality(b.bk, {b.top}, {b.x, b.y}).verified());
    auto r = is_finite_duality(b.bk, {b.x}, {b.x});
    CHECK(r.kind == VerdictKind::Refuted);
    CHECK(r.witness == b.x);
    auto m = is_finite_duality(b.bk, {b.x, b.top}, {b.y});
    CHECK(m.kind == VerdictKind::Malformed);
    CHECK(m.comparable == std::pair<Elem, Elem>{b.x, b.top});
}

TEST_CASE("quasitransversals and transversals")
{
    Bool4 b;
    CHECK(quasitransversals(b.bk, {b.top}) == std::vector<ElemSet>{{b.x}, {b.y}, {b.x, b.y}});
    CHECK(quasitransversals(b.bk, {b.x}) == std::vector<ElemSet>{{b.x}});
    CHECK(quasitransversals(b.bk, {b.x, b.y}) == std::vector<ElemSet>{{b.x, b.y}});

    auto ts = transversals(b.bk, {b.top});
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].members == ElemSet{b.x});
    CHECK(ts[0].complement == ElemSet{b.y});
    CHECK(ts[1].members == ElemSet{b.y});
    auto single = transversals(b.bk, {b.x});
    REQUIRE(single.size() == 1);
    CHECK(single[0].complement.empty());
}

TEST_CASE("r(M) and its inverse")
{
    Bool4 b;
    auto d = spec(b.bk, {b.top}, {b.x, b.y});
    CHECK(r_of_transversal(b.bk, d, {b.x}) == b.y);
    CHECK(r_of_transversal(b.bk, d, {b.y}) == b.x);
    auto dx = spec(b.bk, {b.x}, {b.y});
    CHECK(r_of_transversal(b.bk, dx, {b.x}) == b.y);

    CHECK(transversal_of_r(b.bk, d, b.x).members == ElemSet{b.y});
    CHECK(transversal_of_r(b.bk, d, b.y).members == ElemSet{b.x});
    CHECK(transversal_of_r(b.bk, dx, b.y).members == ElemSet{b.x});

    DualitySpec broken{{b.top}, {b.x}, {}};
    CHECK_THROWS_AS(r_of_transversal(b.bk, broken, {b.x}), Inconsistent);

    CHECK(check_transversal_bijection(b.bk, d).ok);
    CHECK(check_transversal_bijection(b.bk, dx).ok);
    CHECK_FALSE(check_transversal_bijection(b.bk, broken).ok);
}

TEST_CASE("sub-dualities of transversals")
{
    Bool4 b;
    auto d = spec(b.bk, {b.top}, {b.x, b.y});
    auto sx = duality_of_transversal(b.bk, d, {b.x});
    CHECK(sx.left == ElemSet{b.x});
    CHECK(sx.right == ElemSet{b.y});
    CHECK(sx.status.verified());
    auto sy = duality_of_transversal(b.bk, d, {b.y});
    CHECK(sy.right == ElemSet{b.x});
    CHECK(sy.status.verified());
}

TEST_CASE("build_duality")
{
    Bool4 b;
    auto d = build_duality(b.bk, {b.top});
    CHECK(d.right == ElemSet{b.x, b.y});
    CHECK(d.status.verified());
    auto e = build_duality(b.bk, {b.x, b.y});
    CHECK(e.right == ElemSet{b.bot});
    CHECK(e.status.verified());
    CHECK(min_b_prime(b.bk, {b.top}) == ElemSet{b.x, b.y});
    CHECK(min_b_prime(b.bk, {b.x, b.y}) == ElemSet{b.bot});

    CHECK_THROWS_AS(build_duality(b.bk, {b.x, b.top}), MalformedAntichain);
    CHECK_THROWS_AS(build_duality(b.bk, {b.bot}), MissingRightDual);
    auto degenerate = build_duality(b.bk, {b.bot}, {}, EngineOptions{true});
    CHECK(degenerate.right.empty());
    CHECK(degenerate.degenerate());
    CHECK(degenerate.status.verified());

    auto empty = build_duality(b.bk, {});
    CHECK(empty.right == ElemSet{b.top});
    CHECK(empty.degenerate());

    // A custom oracle that never answers surfaces the missing component.
    DualOracle none = [](const OrderBackend&, Elem) { return std::optional<Elem>{}; };
    try {
        build_duality(b.bk, {b.top}, none);
        FAIL("expected MissingRightDual");
    } catch (const MissingRightDual& m) {
        CHECK(m.component == b.x);
    }
}

TEST_CASE("decompose_right")
{
    Bool4 b;
    auto pairs = decompose_right(b.bk, spec(b.bk, {b.x, b.y}, {b.bot}));
    CHECK(pairs == std::vector<std::pair<Elem, Elem>>{{b.x, b.y}, {b.y, b.x}});
    CHECK(decompose_right(b.bk, spec(b.bk, {b.x}, {b.y})) == std::vector<std::pair<Elem, Elem>>{{b.x, b.y}});

    LatticeBackend chain(fixture::chain(3));
    auto two = chain.element("2"), one = chain.element("1");
    CHECK(decompose_right(chain, spec(chain, {two}, {one})) == std::vector<std::pair<Elem, Elem>>{{two, one}});

    try {
        decompose_right(b.bk, DualitySpec{{b.x, b.y}, {b.x}, {}});
        FAIL("expected MeetMismatch");
    } catch (const MeetMismatch& m) {
        CHECK(m.expected == b.x);
        CHECK(m.actual == b.bot);
    }
    CHECK_THROWS_AS(decompose_right(b.bk, DualitySpec{{b.top}, {b.x, b.y}, {}}), InvalidParameter);
}

TEST_CASE("gaps in Boolean 4")
{
    Bool4 b;
    auto gs = gaps(b.bk);
    CHECK(gs
          == std::vector<std::pair<Elem, Elem>>{{b.bot, b.x}, {b.bot, b.y}, {b.x, b.top}, {b.y, b.top}});
    CHECK(gap_witness(b.bk, b.bot, b.x) == std::pair<Elem, Elem>{b.x, b.y});
    CHECK(gap_witness(b.bk, b.x, b.top) == std::pair<Elem, Elem>{b.y, b.x});
    CHECK(gaps_from_duality_pairs(b.bk) == gs);
    CHECK_THROWS_AS(gap_witness(b.bk, b.bot, b.top), NoWitness);
}

TEST_CASE("weak left duals in Boolean 4")
{
    Bool4 b;
    auto w = wld_membership(b.bk, b.top);
    CHECK(w.verdict == Tristate::True);
    CHECK(w.basis == "exhaustive");
    REQUIRE(w.components.size() == 2);
    CHECK(w.components[0].dual == b.y);
    CHECK_FALSE(in_wld(b.bk, b.bot));
    CHECK(in_wld(b.bk, b.bot, EngineOptions{true}));
    for (auto e : b.bk.universe())
        CHECK(below_wld(b.bk, e));

    LatticeBackend m3(diamond_m3());
    CHECK(wld_membership(m3, m3.top()).verdict == Tristate::Unknown);
}

TEST_CASE("wld agrees with the literal definition, with and without degenerate dualities")
{
    std::vector<FiniteLattice> family{fixture::bool4(), fixture::chain(1), fixture::chain(4), diamond_m3(),
                                      pentagon_n5()};
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& o : oracle::poset_classes(n))
            family.push_back(downset_lattice(oracle::to_poset(o)));
    for (const auto& l : family) {
        LatticeBackend bk(l);
        if (!has_connected_decompositions(l).ok)
            continue;
        auto table = oracle::table_of(l);
        for (bool degenerate : {false, true}) {
            auto literal = oracle::literal_wld(table, degenerate);
            for (auto x : bk.universe())
                CHECK(in_wld(bk, x, EngineOptions{degenerate}) == (literal[x] != 0));
        }
    }
}

TEST_CASE("lattice sweep over down-set lattices of posets on at most 3 points")
{
    sweep::LatticeSweep sw;
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& o : oracle::poset_classes(n))
            sweep::sweep_lattice(downset_lattice(oracle::to_poset(o)), sw);
    sweep::sweep_lattice(fixture::chain(5), sw);
    CHECK(sw.dualities > 20);
    require_clean(sw.heyting, "heyting");
    require_clean(sw.decompositions, "decompositions");
    require_clean(sw.wld, "wld");
    require_clean(sw.uniqueness, "uniqueness");
    require_clean(sw.bijection, "bijection");
    require_clean(sw.sub_dualities, "sub-dualities");
    require_clean(sw.component_duals, "component duals");
    require_clean(sw.single_transversal, "single transversal");
    require_clean(sw.complements_meet, "complements meet");
    require_clean(sw.maximal_antichain, "maximal antichain");
    require_clean(sw.reconstruction, "reconstruction");
    require_clean(sw.right_meets, "right meets");
    require_clean(sw.components_of_joins, "components of joins");
    require_clean(sw.antichain_lemma, "antichain lemma");
}

TEST_CASE("gap characterisation on small down-set lattices")
{
    sweep::Tally t;
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& o : oracle::poset_classes(n))
            sweep::sweep_gaps(downset_lattice(oracle::to_poset(o)), t);
    for (const auto& f : t.failures)
        INFO(f);
    CHECK(t.ok());
}

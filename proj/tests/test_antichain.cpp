#include "doctest.h"

#include "duality/engine.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace duality;

namespace {

struct Bool4 {
    LatticeBackend bk = fixture::bool4_backend();
    Elem bot = bk.element("bot"), x = bk.element("x"), y = bk.element("y"), top = bk.element("top");

    DualitySpec duality(ElemSet a, ElemSet b) const
    {
        DualitySpec d{std::move(a), std::move(b), {}};
        d.status = is_finite_duality(bk, d.left, d.right);
        return d;
    }
};

// Lattices bot + P + top for every naturally labelled poset P on `inner` points.
std::vector<oracle::Table> bounded_orders(std::size_t inner)
{
    std::vector<oracle::Table> out;
    for (const auto& o : oracle::naturally_labelled_orders(inner)) {
        const auto n = inner + 2;
        oracle::Table t{n, std::vector<char>(n * n, 0)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool inside = i > 0 && j > 0 && i + 1 < n && j + 1 < n;
                t.leq[i * n + j] = i == j || i == 0 || j + 1 == n || (inside && o.lt(i - 1, j - 1));
            }
        bool lattice = true;
        for (std::size_t a = 0; a < n && lattice; ++a)
            for (std::size_t b = 0; b < n && lattice; ++b) {
                std::vector<std::size_t> ub;
                for (std::size_t c = 0; c < n; ++c)
                    if (t.le(a, c) && t.le(b, c))
                        ub.push_back(c);
                lattice = std::count_if(ub.begin(), ub.end(), [&](std::size_t p) {
                              return std::all_of(ub.begin(), ub.end(), [&](std::size_t q) { return t.le(p, q); });
                          })
                    == 1;
            }
        if (lattice)
            out.push_back(std::move(t));
    }
    return out;
}

} // namespace

TEST_CASE("antichains of dualities in Boolean 4")
{
    Bool4 b;
    auto r1 = antichain_from_duality(b.bk, b.duality({b.x}, {b.y}));
    CHECK(r1.antichain == ElemSet{b.x, b.y});
    CHECK(r1.is_maximal);
    auto r2 = antichain_from_duality(b.bk, b.duality({b.top}, {b.x, b.y}));
    CHECK(r2.antichain == ElemSet{b.top});
    CHECK(r2.is_maximal);
    auto r3 = antichain_from_duality(b.bk, b.duality({b.x, b.y}, {b.bot}));
    CHECK(r3.antichain == ElemSet{b.x, b.y});

    CHECK(is_maximal_antichain(b.bk, {b.x, b.y}));
    CHECK_FALSE(is_maximal_antichain(b.bk, {b.x}));
    CHECK_FALSE(is_maximal_antichain(b.bk, {b.x, b.top}));
    auto partial = antichain_from_duality(b.bk, DualitySpec{{b.x}, {}, {}});
    CHECK_FALSE(partial.is_maximal);
    CHECK(partial.incomparable_witness == b.y);
}

TEST_CASE("dualities recovered from maximal antichains")
{
    Bool4 b;
    auto xy = duality_from_antichain(b.bk, {b.x, b.y});
    REQUIRE(xy.applicable);
    CHECK(xy.duality->left == ElemSet{b.x, b.y});
    CHECK(xy.duality->right == ElemSet{b.bot});
    CHECK(xy.matches);

    auto t = duality_from_antichain(b.bk, {b.top});
    REQUIRE(t.applicable);
    CHECK(t.duality->right == ElemSet{b.x, b.y});
    CHECK(t.reconstructed == ElemSet{b.top});
    CHECK(t.matches);

    // Bottom lies below wld without being a weak left dual.
    auto bot = duality_from_antichain(b.bk, {b.bot});
    CHECK_FALSE(bot.applicable);
    CHECK(bot.wld_part.empty());
    CHECK(bot.below_wld_part == ElemSet{b.bot});

    auto degenerate = duality_from_antichain(b.bk, {b.bot}, EngineOptions{true});
    REQUIRE(degenerate.applicable);
    CHECK(degenerate.duality->right.empty());
    CHECK(degenerate.matches);
}

// Counts maximal antichains C where some member is below wld without being in it.
static std::size_t split_antichains(const oracle::Table& t, bool allow_degenerate, std::size_t& off_bottom)
{
    auto w = oracle::literal_wld(t, allow_degenerate);
    std::vector<char> below(t.n, 0);
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t c = 0; c < t.n; ++c)
            if (w[c] && t.le(a, c))
                below[a] = 1;
    std::size_t count = 0;
    for (const auto& c : oracle::antichains(t)) {
        if (c.empty())
            continue;
        bool maximal = true;
        for (std::size_t v = 0; v < t.n && maximal; ++v)
            maximal = std::any_of(c.begin(), c.end(), [&](std::size_t m) { return t.le(v, m) || t.le(m, v); });
        if (!maximal || std::all_of(c.begin(), c.end(), [&](std::size_t m) { return w[m] == below[m]; }))
            continue;
        ++count;
        if (!(c.size() == 1 && c[0] == 0))
            ++off_bottom;
    }
    return count;
}

TEST_CASE("maximal antichains inside down(wld) are inside wld, except the bottom, in lattices up to 8 elements")
{
    std::size_t lattices = 0, default_hits = 0, degenerate_hits = 0, off_bottom = 0;
    for (std::size_t inner = 0; inner <= 6; ++inner)
        for (const auto& t : bounded_orders(inner)) {
            ++lattices;
            default_hits += split_antichains(t, false, off_bottom);
            degenerate_hits += split_antichains(t, true, off_bottom);
        }
    CHECK(lattices == 4007);
    // {bot} is the only exception, and it disappears once degenerate dualities count.
    CHECK(default_hits == lattices);
    CHECK(degenerate_hits == 0);
    CHECK(off_bottom == 0);
}

TEST_CASE("antichain splitting")
{
    Bool4 b;
    auto s1 = antichain_split(b.bk, {b.x, b.y});
    REQUIRE(s1);
    CHECK(s1->above == ElemSet{b.x});
    CHECK(s1->below == ElemSet{b.y});
    auto s2 = antichain_split(b.bk, {b.top});
    REQUIRE(s2);
    CHECK(s2->above.empty());
    CHECK(s2->below == ElemSet{b.top});
    auto s3 = antichain_split(b.bk, {b.bot});
    REQUIRE(s3);
    CHECK(s3->above == ElemSet{b.bot});
    CHECK(s3->below.empty());

    // The M3 atoms split as well: top is above a, bottom below b.
    LatticeBackend m3(diamond_m3());
    auto atoms = make_set({m3.element("a"), m3.element("b"), m3.element("c")});
    auto s4 = antichain_split(m3, atoms);
    REQUIRE(s4);
    CHECK(s4->above == ElemSet{m3.element("a")});

    // A chain y < m < x beside an element z: m would have to be on both sides.
    LatticeBackend side(fixture::lattice({"bot", "y", "m", "x", "z", "top"}, {{"bot", "y"}, {"y", "m"}, {"m", "x"},
                                                                             {"x", "top"}, {"bot", "z"}, {"z", "top"}}));
    auto mz = make_set({side.element("m"), side.element("z")});
    CHECK(is_maximal_antichain(side, mz));
    CHECK_FALSE(antichain_split(side, mz).has_value());
    CHECK_THROWS_AS(antichain_split(DigraphBackend({2, 5}), {}), InvalidParameter);
}

TEST_CASE("split results partition C and cover everything else")
{
    std::size_t split = 0, unsplit = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& o : oracle::poset_classes(n)) {
            LatticeBackend bk(downset_lattice(oracle::to_poset(o)));
            for (const auto& c : sweep::maximal_antichains(bk)) {
                auto s = antichain_split(bk, c);
                // Brute force over independent choices of the two sides.
                bool exists = false;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()) && !exists; ++mask) {
                    ElemSet a, b;
                    for (std::size_t i = 0; i < c.size(); ++i)
                        ((mask >> i) & 1U ? a : b).push_back(c[i]);
                    exists = std::all_of(bk.universe().begin(), bk.universe().end(), [&](Elem x) {
                        if (std::binary_search(c.begin(), c.end(), x))
                            return true;
                        return std::any_of(a.begin(), a.end(), [&](Elem t) { return bk.leq(t, x); })
                            || std::any_of(b.begin(), b.end(), [&](Elem t) { return bk.leq(x, t); });
                    });
                }
                CHECK(s.has_value() == exists);
                if (!s) {
                    ++unsplit;
                    continue;
                }
                ++split;
                ElemSet both = s->above;
                both.insert(both.end(), s->below.begin(), s->below.end());
                std::sort(both.begin(), both.end());
                CHECK(both == c);
                for (auto x : bk.universe())
                    if (!std::binary_search(c.begin(), c.end(), x))
                        CHECK((in_up(bk, x, s->above) || in_down(bk, x, s->below)));
            }
        }
    CHECK(split > 0);
    CHECK(unsplit > 0);
}

TEST_CASE("sparse incomparability on lattices")
{
    Bool4 b;
    for (auto x : {b.x, b.y, b.top})
        CHECK(sia_check(b.bk, x, {}, {}).kind == SiaKind::PreconditionFails);
    auto bot = sia_check(b.bk, b.bot, {}, {});
    CHECK(bot.kind == SiaKind::NoWitness);
    CHECK(bot.conclusive);
    for (auto x : b.bk.universe())
        CHECK(sia_check(b.bk, x, {}, {}, EngineOptions{true}).kind == SiaKind::PreconditionFails);

    auto sweep_default = sia_sweep(b.bk, b.bk.universe());
    CHECK_FALSE(sweep_default.holds);
    REQUIRE(sweep_default.counterexample);
    CHECK(std::get<0>(*sweep_default.counterexample) == b.bot);
    auto sweep_degenerate = sia_sweep(b.bk, b.bk.universe(), EngineOptions{true});
    CHECK(sweep_degenerate.holds);
    CHECK(sweep_degenerate.instances == 0);

    CHECK_THROWS_AS(sia_sweep(b.bk, ElemSet(11, 0)), SizeLimit);
}

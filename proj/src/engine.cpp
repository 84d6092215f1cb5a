#include "duality/engine.hpp"

#include <algorithm>
#include <cstdint>

namespace duality {

ElemSet make_set(std::vector<Elem> xs)
{
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool in_up(const OrderBackend& bk, Elem x, const ElemSet& s)
{
    return std::any_of(s.begin(), s.end(), [&](Elem m) { return bk.leq(m, x); });
}

bool in_down(const OrderBackend& bk, Elem x, const ElemSet& s)
{
    return std::any_of(s.begin(), s.end(), [&](Elem m) { return bk.leq(x, m); });
}

ElemSet up_set(const OrderBackend& bk, const ElemSet& s)
{
    ElemSet out;
    for (auto x : bk.universe())
        if (in_up(bk, x, s))
            out.push_back(x);
    return make_set(std::move(out));
}

ElemSet down_set(const OrderBackend& bk, const ElemSet& s)
{
    ElemSet out;
    for (auto x : bk.universe())
        if (in_down(bk, x, s))
            out.push_back(x);
    return make_set(std::move(out));
}

ElemSet minimal_of(const OrderBackend& bk, const ElemSet& s)
{
    ElemSet out;
    for (auto x : s)
        if (std::none_of(s.begin(), s.end(), [&](Elem y) { return bk.less(y, x); }))
            out.push_back(x);
    return make_set(std::move(out));
}

ElemSet maximal_of(const OrderBackend& bk, const ElemSet& s)
{
    ElemSet out;
    for (auto x : s)
        if (std::none_of(s.begin(), s.end(), [&](Elem y) { return bk.less(x, y); }))
            out.push_back(x);
    return make_set(std::move(out));
}

std::optional<std::pair<Elem, Elem>> comparable_pair(const OrderBackend& bk, const ElemSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && bk.comparable(s[i], s[j]))
                return std::pair{s[i], s[j]};
    return std::nullopt;
}

bool is_antichain(const OrderBackend& bk, const ElemSet& s) { return !comparable_pair(bk, s); }

Elem join_all(const OrderBackend& bk, const ElemSet& s)
{
    Elem acc = bk.bottom();
    for (auto x : s)
        acc = bk.join(acc, x);
    return acc;
}

Elem meet_all(const OrderBackend& bk, const ElemSet& s)
{
    Elem acc = bk.top();
    for (auto x : s)
        acc = bk.meet(acc, x);
    return acc;
}

// ---- Duality pairs and finite dualities ----------------------------------------

namespace {

    Verdict verified(const OrderBackend& bk)
    {
        Verdict v;
        v.kind = VerdictKind::Verified;
        v.bound = bk.bound();
        v.exhaustive = bk.exhaustive();
        return v;
    }

    Verdict refuted(const OrderBackend& bk, Elem witness)
    {
        auto v = verified(bk);
        v.kind = VerdictKind::Refuted;
        v.witness = witness;
        return v;
    }

} // namespace

Verdict is_duality_pair(const OrderBackend& bk, Elem l, Elem r)
{
    for (auto x : bk.universe())
        if (bk.leq(l, x) == bk.leq(x, r))
            return refuted(bk, x);
    return verified(bk);
}

std::optional<Elem> right_dual_of(const OrderBackend& bk, Elem l)
{
    for (auto r : bk.universe()) {
        // A right dual lies outside up(l); skip the full scan otherwise.
        if (bk.leq(l, r))
            continue;
        if (is_duality_pair(bk, l, r).verified())
            return r;
    }
    return std::nullopt;
}

std::optional<Elem> default_dual_oracle(const OrderBackend& bk, Elem l)
{
    if (auto c = bk.catalog_dual(l); c && is_duality_pair(bk, l, *c).verified())
        return c;
    return right_dual_of(bk, l);
}

Verdict is_finite_duality(const OrderBackend& bk, const ElemSet& left, const ElemSet& right)
{
    for (const auto* side : {&left, &right})
        if (auto pr = comparable_pair(bk, *side)) {
            auto v = verified(bk);
            v.kind = VerdictKind::Malformed;
            v.comparable = pr;
            return v;
        }
    for (auto x : bk.universe())
        if (in_up(bk, x, left) == in_down(bk, x, right))
            return refuted(bk, x);
    return verified(bk);
}

// ---- Transversals ----------------------------------------------------------------

ElemSet components_of_set(const OrderBackend& bk, const ElemSet& a)
{
    ElemSet out;
    for (auto x : a) {
        auto cs = bk.components(x);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return make_set(std::move(out));
}

namespace {

    constexpr std::size_t max_component_count = 24;

    // Bitmask view of A_Cn: bit i stands for cn[i].
    struct ComponentMasks {
        ElemSet cn;
        std::vector<std::uint32_t> comparable; // elements comparable to cn[i], excluding i
        std::vector<std::uint32_t> up;         // elements >= cn[i], including i
        std::vector<std::uint32_t> below_a;    // per a in A: elements <= a

        ComponentMasks(const OrderBackend& bk, const ElemSet& a) : cn(components_of_set(bk, a))
        {
            if (cn.size() > max_component_count)
                throw SizeLimit("transversal enumeration supports at most " + std::to_string(max_component_count)
                                + " components, got " + std::to_string(cn.size()));
            const auto k = cn.size();
            comparable.assign(k, 0);
            up.assign(k, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i != j && bk.comparable(cn[i], cn[j]))
                        comparable[i] |= 1U << j;
                    if (bk.leq(cn[i], cn[j]))
                        up[i] |= 1U << j;
                }
            for (auto x : a) {
                std::uint32_t m = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (bk.leq(cn[i], x))
                        m |= 1U << i;
                below_a.push_back(m);
            }
        }

        std::uint32_t up_of(std::uint32_t mask) const
        {
            std::uint32_t u = 0;
            for (std::size_t i = 0; i < cn.size(); ++i)
                if ((mask >> i) & 1U)
                    u |= up[i];
            return u;
        }

        ElemSet decode(std::uint32_t mask) const
        {
            ElemSet out;
            for (std::size_t i = 0; i < cn.size(); ++i)
                if ((mask >> i) & 1U)
                    out.push_back(cn[i]);
            return out;
        }

        std::uint32_t full() const { return cn.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << cn.size()) - 1); }

        std::vector<std::uint32_t> quasitransversal_masks() const
        {
            std::vector<std::uint32_t> out;
            const std::uint64_t limit = std::uint64_t{1} << cn.size();
            for (std::uint64_t m = 0; m < limit; ++m) {
                const auto mask = static_cast<std::uint32_t>(m);
                bool ok = true;
                for (std::size_t i = 0; i < cn.size() && ok; ++i)
                    if (((mask >> i) & 1U) && (mask & comparable[i]))
                        ok = false;
                for (std::size_t j = 0; j < below_a.size() && ok; ++j)
                    if ((mask & below_a[j]) == 0)
                        ok = false;
                if (ok)
                    out.push_back(mask);
            }
            return out;
        }

        std::vector<std::uint32_t> transversal_masks() const
        {
            auto qs = quasitransversal_masks();
            std::vector<std::uint32_t> out;
            for (auto m : qs) {
                const auto upm = up_of(m);
                bool maximal = std::none_of(qs.begin(), qs.end(), [&](std::uint32_t n) { return n != m && (n & ~upm) == 0; });
                if (maximal)
                    out.push_back(m);
            }
            return out;
        }
    };

} // namespace

std::vector<ElemSet> quasitransversals(const OrderBackend& bk, const ElemSet& a)
{
    ComponentMasks cm(bk, a);
    std::vector<ElemSet> out;
    for (auto m : cm.quasitransversal_masks())
        out.push_back(cm.decode(m));
    return out;
}

std::vector<Transversal> transversals(const OrderBackend& bk, const ElemSet& a)
{
    ComponentMasks cm(bk, a);
    std::vector<Transversal> out;
    for (auto m : cm.transversal_masks())
        out.push_back({cm.decode(m), cm.decode(cm.full() & ~cm.up_of(m)), std::nullopt});
    return out;
}

namespace {

    ElemSet complement_of(const OrderBackend& bk, const ElemSet& cn, const ElemSet& members)
    {
        ElemSet out;
        for (auto c : cn)
            if (!in_up(bk, c, members))
                out.push_back(c);
        return out;
    }

} // namespace

Elem r_of_transversal(const OrderBackend& bk, const DualitySpec& d, const ElemSet& members)
{
    const auto cn = components_of_set(bk, d.left);
    const auto complement = complement_of(bk, cn, members);
    std::vector<Elem> hits;
    for (auto r : d.right) {
        bool disjoint = std::none_of(members.begin(), members.end(), [&](Elem m) { return bk.leq(m, r); });
        bool covers = std::all_of(complement.begin(), complement.end(), [&](Elem c) { return bk.leq(c, r); });
        if (disjoint && covers)
            hits.push_back(r);
    }
    if (hits.size() != 1)
        throw Inconsistent(std::to_string(hits.size()) + " right elements match the transversal; expected exactly one");
    return hits.front();
}

Transversal transversal_of_r(const OrderBackend& bk, const DualitySpec& d, Elem r)
{
    const auto cn = components_of_set(bk, d.left);
    ElemSet not_below;
    for (auto c : cn)
        if (!bk.leq(c, r))
            not_below.push_back(c);
    const auto seed = minimal_of(bk, not_below);

    for (auto& t : transversals(bk, d.left)) {
        const bool coarser = std::all_of(t.members.begin(), t.members.end(), [&](Elem m) { return in_up(bk, m, seed); });
        if (!coarser)
            continue;
        try {
            if (r_of_transversal(bk, d, t.members) == r) {
                t.r = r;
                return t;
            }
        } catch (const Inconsistent&) {
        }
    }
    throw Inconsistent("no transversal coarser than Min{x in A_Cn : x !<= r} maps back to " + bk.describe(r));
}

BijectionCheck check_transversal_bijection(const OrderBackend& bk, const DualitySpec& d)
{
    BijectionCheck result;
    auto ts = transversals(bk, d.left);
    std::vector<Elem> images;
    for (const auto& t : ts) {
        try {
            images.push_back(r_of_transversal(bk, d, t.members));
        } catch (const Inconsistent& e) {
            return {false, t.members, std::nullopt, e.what()};
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (images[i] == images[j])
                return {false, ts[j].members, images[j], "two transversals share a right element"};
    for (auto r : d.right) {
        auto it = std::find(images.begin(), images.end(), r);
        if (it == images.end())
            return {false, std::nullopt, r, "right element is not r(M) of any transversal"};
        try {
            auto back = transversal_of_r(bk, d, r);
            if (back.members != ts[static_cast<std::size_t>(it - images.begin())].members)
                return {false, back.members, r, "r -> M_r is not inverse to M -> r(M)"};
        } catch (const Inconsistent& e) {
            return {false, std::nullopt, r, e.what()};
        }
    }
    if (images.size() != d.right.size())
        return {false, std::nullopt, std::nullopt, "transversal count differs from |B|"};
    return result;
}

DualitySpec duality_of_transversal(const OrderBackend& bk, const DualitySpec& d, const ElemSet& members)
{
    DualitySpec out;
    out.left = members;
    out.right = {r_of_transversal(bk, d, members)};
    out.status = is_finite_duality(bk, out.left, out.right);
    return out;
}

// ---- Constructing dualities --------------------------------------------------------

namespace {

    DualOracle oracle_or_default(const DualOracle& oracle)
    {
        if (oracle)
            return oracle;
        return [](const OrderBackend& bk, Elem l) { return default_dual_oracle(bk, l); };
    }

    std::vector<std::pair<Elem, Elem>> duals_of_components(const OrderBackend& bk, const ElemSet& cn,
                                                           const DualOracle& oracle)
    {
        std::vector<std::pair<Elem, Elem>> out;
        for (auto c : cn) {
            auto r = oracle(bk, c);
            if (!r)
                throw MissingRightDual(c, "no right dual found for component " + bk.describe(c) + " at bound "
                                              + std::to_string(bk.bound()));
            out.emplace_back(c, *r);
        }
        return out;
    }

    Elem dual_lookup(const std::vector<std::pair<Elem, Elem>>& duals, Elem c)
    {
        for (auto [k, v] : duals)
            if (k == c)
                return v;
        throw Inconsistent("component without a recorded dual");
    }

} // namespace

DualitySpec build_duality(const OrderBackend& bk, const ElemSet& a, const DualOracle& oracle, const EngineOptions& opts)
{
    if (auto pr = comparable_pair(bk, a))
        throw MalformedAntichain(pr->first, pr->second,
                                 "left side is not an antichain: " + bk.describe(pr->first) + " and "
                                     + bk.describe(pr->second) + " are comparable");

    DualitySpec out;
    out.left = a;
    if (std::find(a.begin(), a.end(), bk.bottom()) != a.end()) {
        // up(bottom) is everything, so B must be empty; bottom has no right dual.
        if (!opts.allow_degenerate)
            throw MissingRightDual(bk.bottom(), "the bottom element has no right dual (degenerate duality not allowed)");
        out.status = is_finite_duality(bk, out.left, out.right);
        return out;
    }

    const auto dual = oracle_or_default(oracle);
    const auto duals = duals_of_components(bk, components_of_set(bk, a), dual);
    std::vector<Elem> rights;
    for (const auto& t : transversals(bk, a)) {
        ElemSet rs;
        for (auto c : t.members)
            rs.push_back(dual_lookup(duals, c));
        rights.push_back(meet_all(bk, make_set(std::move(rs))));
    }
    out.right = make_set(std::move(rights));
    out.status = is_finite_duality(bk, out.left, out.right);
    return out;
}

ElemSet min_b_prime(const OrderBackend& bk, const ElemSet& a, const DualOracle& oracle)
{
    const auto dual = oracle_or_default(oracle);
    std::vector<ElemSet> comps;
    for (auto x : a)
        comps.push_back(bk.components(x));
    const auto duals = duals_of_components(bk, components_of_set(bk, a), dual);

    std::vector<Elem> b_prime;
    std::vector<std::size_t> pick(a.size(), 0);
    while (true) {
        ElemSet rs;
        for (std::size_t i = 0; i < a.size(); ++i)
            rs.push_back(dual_lookup(duals, comps[i][pick[i]]));
        b_prime.push_back(meet_all(bk, make_set(std::move(rs))));
        std::size_t i = 0;
        while (i < a.size() && ++pick[i] == comps[i].size())
            pick[i++] = 0;
        if (i == a.size())
            break;
    }
    return minimal_of(bk, make_set(std::move(b_prime)));
}

std::vector<std::pair<Elem, Elem>> decompose_right(const OrderBackend& bk, const DualitySpec& d, const DualOracle& oracle)
{
    if (d.right.size() != 1)
        throw InvalidParameter("decompose_right needs a duality with exactly one right element");
    const auto dual = oracle_or_default(oracle);
    std::vector<std::pair<Elem, Elem>> out;
    ElemSet rs;
    for (auto l : d.left) {
        auto r = dual(bk, l);
        if (!r)
            throw MissingRightDual(l, "no right dual found for " + bk.describe(l));
        out.emplace_back(l, *r);
        rs.push_back(*r);
    }
    const auto m = meet_all(bk, make_set(std::move(rs)));
    if (m != d.right.front())
        throw MeetMismatch(d.right.front(), m,
                           "meet of right duals " + bk.describe(m) + " differs from " + bk.describe(d.right.front()));
    return out;
}

// ---- Gaps ----------------------------------------------------------------------------

std::vector<std::pair<Elem, Elem>> gaps(const OrderBackend& bk)
{
    if (!bk.exhaustive())
        throw InvalidParameter("gaps requires an exhaustive backend");
    const auto& u = bk.universe();
    std::vector<std::pair<Elem, Elem>> out;
    for (auto a : u)
        for (auto b : u) {
            if (!bk.less(a, b))
                continue;
            bool between = std::any_of(u.begin(), u.end(), [&](Elem c) { return bk.less(a, c) && bk.less(c, b); });
            if (!between)
                out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Elem, Elem> gap_witness(const OrderBackend& bk, Elem a, Elem b)
{
    for (auto l : bk.universe()) {
        auto r = right_dual_of(bk, l);
        if (!r)
            continue;
        if (bk.leq(bk.meet(l, *r), a) && bk.leq(a, *r) && bk.join(a, l) == b)
            return {l, *r};
    }
    throw NoWitness("no duality pair realises the gap (" + bk.describe(a) + ", " + bk.describe(b) + ")");
}

std::vector<std::pair<Elem, Elem>> gaps_from_duality_pairs(const OrderBackend& bk)
{
    if (!bk.exhaustive())
        throw InvalidParameter("gaps_from_duality_pairs requires an exhaustive backend");
    std::vector<std::pair<Elem, Elem>> out;
    for (auto l : bk.universe()) {
        auto r = right_dual_of(bk, l);
        if (!r)
            continue;
        const auto floor = bk.meet(l, *r);
        for (auto a : bk.universe())
            if (bk.leq(floor, a) && bk.leq(a, *r))
                out.emplace_back(a, bk.join(a, l));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- Weak left duals -------------------------------------------------------------------

WldResult wld_membership(const OrderBackend& bk, Elem a, const EngineOptions& opts)
{
    WldResult out;
    if (a == bk.bottom()) {
        // Only the degenerate duality ({bottom}, {}) has bottom on the left.
        out.verdict = opts.allow_degenerate ? Tristate::True : Tristate::False;
        out.basis = "degenerate";
        return out;
    }

    ElemSet comps;
    try {
        comps = bk.components(a);
    } catch (const NoDecomposition&) {
        out.verdict = Tristate::Unknown;
        out.basis = "no connected decomposition";
        return out;
    }

    bool all_found = true;
    for (auto c : comps) {
        auto r = default_dual_oracle(bk, c);
        all_found &= r.has_value();
        out.components.push_back({c, r});
    }

    if (bk.exhaustive()) {
        out.verdict = all_found ? Tristate::True : Tristate::False;
        out.basis = "exhaustive";
    } else if (auto s = bk.structural_wld(a)) {
        out.verdict = *s ? Tristate::True : Tristate::False;
        out.basis = "structural";
    } else {
        out.verdict = Tristate::Unknown;
        out.basis = "bounded";
    }
    return out;
}

bool in_wld(const OrderBackend& bk, Elem a, const EngineOptions& opts)
{
    if (a == bk.bottom())
        return opts.allow_degenerate;
    if (!bk.exhaustive())
        if (auto s = bk.structural_wld(a))
            return *s;
    return wld_membership(bk, a, opts).verdict == Tristate::True;
}

bool below_wld(const OrderBackend& bk, Elem a, const EngineOptions& opts)
{
    if (!bk.exhaustive()) {
        if (auto s = bk.structural_below_wld(a))
            return *s;
        throw InvalidParameter("down-closure of the weak left duals is unknown for this backend");
    }
    const auto& u = bk.universe();
    return std::any_of(u.begin(), u.end(), [&](Elem w) { return bk.leq(a, w) && in_wld(bk, w, opts); });
}

// ---- Antichains --------------------------------------------------------------------------

bool is_maximal_antichain(const OrderBackend& bk, const ElemSet& c)
{
    if (!is_antichain(bk, c))
        return false;
    const auto& u = bk.universe();
    return std::all_of(u.begin(), u.end(), [&](Elem x) {
        return std::any_of(c.begin(), c.end(), [&](Elem m) { return bk.comparable(x, m); });
    });
}

AntichainReport antichain_from_duality(const OrderBackend& bk, const DualitySpec& d)
{
    AntichainReport out;
    std::vector<Elem> c(d.left.begin(), d.left.end());
    for (auto b : d.right)
        if (!in_down(bk, b, d.left))
            c.push_back(b);
    out.antichain = make_set(std::move(c));
    out.is_antichain = is_antichain(bk, out.antichain);
    out.is_maximal = out.is_antichain;
    for (auto x : bk.universe()) {
        bool touches = std::any_of(out.antichain.begin(), out.antichain.end(), [&](Elem m) { return bk.comparable(x, m); });
        if (!touches) {
            out.is_maximal = false;
            out.incomparable_witness = x;
            break;
        }
    }
    return out;
}

FromAntichain duality_from_antichain(const OrderBackend& bk, const ElemSet& c, const EngineOptions& opts)
{
    FromAntichain out;
    for (auto x : c) {
        if (in_wld(bk, x, opts))
            out.wld_part.push_back(x);
        if (below_wld(bk, x, opts))
            out.below_wld_part.push_back(x);
    }
    if (out.wld_part != out.below_wld_part) {
        out.reason = "C meets down(wld) outside wld";
        return out;
    }
    out.applicable = true;
    auto d = build_duality(bk, out.wld_part, {}, opts);
    std::vector<Elem> rebuilt(d.left.begin(), d.left.end());
    for (auto b : d.right)
        if (!in_down(bk, b, d.left))
            rebuilt.push_back(b);
    out.reconstructed = make_set(std::move(rebuilt));
    out.matches = out.reconstructed == make_set(c);
    out.duality = std::move(d);
    return out;
}

std::optional<Split> antichain_split(const OrderBackend& bk, const ElemSet& c)
{
    if (!bk.exhaustive())
        throw InvalidParameter("antichain_split requires an exhaustive backend");
    if (c.size() >= 32)
        throw SizeLimit("antichain_split supports at most 31 elements");
    std::vector<Elem> outside;
    for (auto x : bk.universe())
        if (!std::binary_search(c.begin(), c.end(), x))
            outside.push_back(x);

    const std::uint64_t limit = std::uint64_t{1} << c.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Split s;
        for (std::size_t i = 0; i < c.size(); ++i)
            ((mask >> i) & 1U ? s.above : s.below).push_back(c[i]);
        bool ok = std::all_of(outside.begin(), outside.end(),
                              [&](Elem x) { return in_up(bk, x, s.above) || in_down(bk, x, s.below); });
        if (ok)
            return s;
    }
    return std::nullopt;
}

// ---- Sparse incomparability -----------------------------------------------------------------

SiaResult sia_check(const OrderBackend& bk, Elem x, const ElemSet& m, const ElemSet& u, const EngineOptions& opts)
{
    SiaResult out;
    out.bound = bk.bound();
    // up(U) meets wld iff some u lies below a weak left dual.
    const bool precondition = !in_wld(bk, x, opts)
        && std::none_of(u.begin(), u.end(), [&](Elem v) { return below_wld(bk, v, opts); });
    if (!precondition) {
        out.kind = SiaKind::PreconditionFails;
        out.conclusive = true;
        return out;
    }

    for (auto y : bk.universe()) {
        if (!bk.leq(y, x) || bk.leq(x, y))
            continue;
        if (std::any_of(u.begin(), u.end(), [&](Elem v) { return bk.leq(v, y); }))
            continue;
        if (!std::all_of(m.begin(), m.end(), [&](Elem t) { return bk.leq(y, t) == bk.leq(x, t); }))
            continue;
        if (in_wld(bk, y, opts))
            continue;
        out.kind = SiaKind::Witness;
        out.witness = y;
        out.conclusive = true;
        return out;
    }
    out.kind = SiaKind::NoWitness;
    out.conclusive = bk.exhaustive();
    return out;
}

SiaSweep sia_sweep(const OrderBackend& bk, const ElemSet& pool, const EngineOptions& opts)
{
    if (pool.size() > 10)
        throw SizeLimit("sia_sweep supports pools of at most 10 elements");
    SiaSweep out;
    const std::uint32_t limit = 1U << pool.size();
    auto subset = [&](std::uint32_t mask) {
        ElemSet s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((mask >> i) & 1U)
                s.push_back(pool[i]);
        return s;
    };
    for (auto x : pool) {
        if (in_wld(bk, x, opts))
            continue;
        for (std::uint32_t um = 0; um < limit; ++um) {
            auto us = subset(um);
            if (std::any_of(us.begin(), us.end(), [&](Elem v) { return below_wld(bk, v, opts); }))
                continue;
            for (std::uint32_t mm = 0; mm < limit; ++mm) {
                auto ms = subset(mm);
                auto r = sia_check(bk, x, ms, us, opts);
                ++out.instances;
                if (r.kind == SiaKind::NoWitness) {
                    out.holds = false;
                    out.counterexample = std::tuple{x, ms, us};
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace duality

#include "duality/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace duality {

Element FinitePoset::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw UnknownElement("unknown element '" + label + "'");
    return static_cast<Element>(it - labels_.begin());
}

std::vector<std::pair<Element, Element>> FinitePoset::covering_pairs() const
{
    std::vector<std::pair<Element, Element>> result;
    const auto n = size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (!less(a, b))
                continue;
            bool covers = true;
            for (Element c = 0; c < n && covers; ++c)
                if (less(a, c) && less(c, b))
                    covers = false;
            if (covers)
                result.emplace_back(a, b);
        }
    return result;
}

FinitePoset validate_poset(std::vector<std::string> elements, std::span<const std::pair<Element, Element>> pairs)
{
    const auto n = elements.size();
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (const auto& e : elements)
            if (!seen.emplace(e, 0).second)
                throw DuplicateElement("duplicate element '" + e + "'");
    }

    FinitePoset p;
    p.labels_ = std::move(elements);
    p.leq_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a)
        p.leq_[a * n + a] = 1;
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            throw UnknownElement("relation pair references element index out of range");
        p.leq_[a * n + b] = 1;
    }

    // Warshall closure.
    for (Element k = 0; k < n; ++k)
        for (Element i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (Element j = 0; j < n; ++j)
                    if (p.leq_[k * n + j])
                        p.leq_[i * n + j] = 1;

    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b)
            if (p.leq_[a * n + b] && p.leq_[b * n + a])
                throw CycleError("order relation has a cycle through '" + p.labels_[a] + "' and '" + p.labels_[b] + "'");
    return p;
}

FinitePoset validate_poset(std::vector<std::string> elements,
                           std::span<const std::pair<std::string, std::string>> pairs)
{
    std::unordered_map<std::string, Element> index;
    for (Element i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], i).second)
            throw DuplicateElement("duplicate element '" + elements[i] + "'");

    std::vector<std::pair<Element, Element>> idx;
    idx.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end())
            throw UnknownElement("unknown element '" + a + "' in leq");
        if (ib == index.end())
            throw UnknownElement("unknown element '" + b + "' in leq");
        idx.emplace_back(ia->second, ib->second);
    }
    return validate_poset(std::move(elements), idx);
}

namespace {

    // Least upper bound of a and b, if any.
    std::optional<Element> find_join(const FinitePoset& p, Element a, Element b)
    {
        std::optional<Element> best;
        for (Element c = 0; c < p.size(); ++c) {
            if (!p.leq(a, c) || !p.leq(b, c))
                continue;
            if (!best || p.leq(c, *best))
                best = c;
        }
        if (!best)
            return std::nullopt;
        for (Element c = 0; c < p.size(); ++c)
            if (p.leq(a, c) && p.leq(b, c) && !p.leq(*best, c))
                return std::nullopt;
        return best;
    }

    std::optional<Element> find_meet(const FinitePoset& p, Element a, Element b)
    {
        std::optional<Element> best;
        for (Element c = 0; c < p.size(); ++c) {
            if (!p.leq(c, a) || !p.leq(c, b))
                continue;
            if (!best || p.leq(*best, c))
                best = c;
        }
        if (!best)
            return std::nullopt;
        for (Element c = 0; c < p.size(); ++c)
            if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, *best))
                return std::nullopt;
        return best;
    }

} // namespace

LatticeCheck is_lattice(const FinitePoset& p)
{
    for (Element a = 0; a < p.size(); ++a)
        for (Element b = a; b < p.size(); ++b) {
            if (!find_join(p, a, b))
                return {false, std::pair{a, b}, "no least upper bound"};
            if (!find_meet(p, a, b))
                return {false, std::pair{a, b}, "no greatest lower bound"};
        }
    if (p.size() == 0)
        return {false, std::nullopt, "empty poset has no bounds"};
    return {};
}

FiniteLattice::FiniteLattice(FinitePoset p) : poset_(std::move(p))
{
    const auto n = poset_.size();
    if (n == 0)
        throw NotALattice("empty poset is not a bounded lattice");
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b) {
            auto j = find_join(poset_, a, b);
            if (!j)
                throw NotALattice("'" + poset_.label(a) + "' and '" + poset_.label(b) + "' have no least upper bound");
            auto m = find_meet(poset_, a, b);
            if (!m)
                throw NotALattice("'" + poset_.label(a) + "' and '" + poset_.label(b) + "' have no greatest lower bound");
            join_[a * n + b] = join_[b * n + a] = *j;
            meet_[a * n + b] = meet_[b * n + a] = *m;
        }
    bottom_ = 0;
    top_ = 0;
    for (Element a = 1; a < n; ++a) {
        bottom_ = meet(bottom_, a);
        top_ = join(top_, a);
    }
}

Element FiniteLattice::join_all(std::span<const Element> xs) const
{
    Element acc = bottom_;
    for (auto x : xs)
        acc = join(acc, x);
    return acc;
}

Element FiniteLattice::meet_all(std::span<const Element> xs) const
{
    Element acc = top_;
    for (auto x : xs)
        acc = meet(acc, x);
    return acc;
}

FiniteLattice downset_lattice(const FinitePoset& p, const DownsetOptions& opts)
{
    const auto n = p.size();
    if (n >= 63 || (std::size_t{1} << n) > opts.max_elements)
        throw SizeLimit("down-set lattice of a " + std::to_string(n) + "-point poset exceeds the cap of "
                        + std::to_string(opts.max_elements) + " elements");

    std::vector<std::uint64_t> below(n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (p.leq(b, a))
                below[a] |= std::uint64_t{1} << b;

    std::vector<std::uint64_t> sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool closed = true;
        for (Element a = 0; a < n && closed; ++a)
            if ((mask >> a) & 1U)
                closed = (below[a] & ~mask) == 0;
        if (closed)
            sets.push_back(mask);
    }

    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (auto mask : sets) {
        std::string s = "{";
        bool first = true;
        for (Element a = 0; a < n; ++a)
            if ((mask >> a) & 1U) {
                if (!first)
                    s += ",";
                s += p.label(a);
                first = false;
            }
        labels.push_back(s + "}");
    }

    std::vector<std::pair<Element, Element>> pairs;
    for (Element i = 0; i < sets.size(); ++i)
        for (Element j = 0; j < sets.size(); ++j)
            if (i != j && (sets[i] & ~sets[j]) == 0)
                pairs.emplace_back(i, j);
    return FiniteLattice(validate_poset(std::move(labels), pairs));
}

TripleCheck is_distributive(const FiniteLattice& l)
{
    const auto n = l.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
                    return {false, std::tuple{a, b, c}};
    return {};
}

namespace {

    std::optional<Element> arrow_scan(const FiniteLattice& l, Element b, Element c)
    {
        // Downward scan: a candidate is the maximum iff every other candidate lies below it.
        std::vector<Element> candidates;
        for (Element a = 0; a < l.size(); ++a)
            if (l.leq(l.meet(a, b), c))
                candidates.push_back(a);
        for (auto m : candidates) {
            bool is_max = true;
            for (auto a : candidates)
                if (!l.leq(a, m)) {
                    is_max = false;
                    break;
                }
            if (is_max)
                return m;
        }
        return std::nullopt;
    }

} // namespace

Element heyting_arrow(const FiniteLattice& l, Element b, Element c)
{
    if (auto r = arrow_scan(l, b, c))
        return *r;
    throw NotHeyting(b, c, "no relative pseudo-complement for '" + l.label(b) + "' => '" + l.label(c) + "'");
}

HeytingCheck is_heyting(const FiniteLattice& l)
{
    for (Element b = 0; b < l.size(); ++b)
        for (Element c = 0; c < l.size(); ++c)
            if (!arrow_scan(l, b, c))
                return {false, std::pair{b, c}};
    return {};
}

HeytingTable::HeytingTable(const FiniteLattice& l) : n_(l.size()), arrow_(n_ * n_)
{
    for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c)
            arrow_[b * n_ + c] = heyting_arrow(l, b, c);
}

ConnectedSet connected_elements(const FiniteLattice& l)
{
    const auto n = l.size();
    ConnectedSet cn;
    cn.member.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        bool connected = true;
        for (Element b = 0; b < n && connected; ++b)
            for (Element c = b; c < n && connected; ++c)
                if (l.leq(a, l.join(b, c)) && !l.leq(a, b) && !l.leq(a, c))
                    connected = false;
        if (connected) {
            cn.member[a] = 1;
            cn.members.push_back(a);
        }
    }
    return cn;
}

ElementSet components(const FiniteLattice& l, const ConnectedSet& cn, Element a)
{
    ElementSet below;
    for (auto c : cn.members)
        if (l.leq(c, a))
            below.push_back(c);
    auto result = maximal(l.poset(), below);
    if (l.join_all(result) != a)
        throw NoDecomposition(a, "'" + l.label(a) + "' is not the join of its maximal connected lower bounds");
    return result;
}

ElementSet components(const FiniteLattice& l, Element a) { return components(l, connected_elements(l), a); }

ElementSet components_of_set(const FiniteLattice& l, const ConnectedSet& cn, std::span<const Element> xs)
{
    ElementSet out;
    for (auto a : xs) {
        auto cs = components(l, cn, a);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElementSet components_of_set(const FiniteLattice& l, std::span<const Element> xs)
{
    return components_of_set(l, connected_elements(l), xs);
}

DecompositionCheck has_connected_decompositions(const FiniteLattice& l)
{
    auto cn = connected_elements(l);
    ElementSet failing;
    for (Element a = 0; a < l.size(); ++a) {
        try {
            components(l, cn, a);
        } catch (const NoDecomposition&) {
            failing.push_back(a);
        }
    }
    if (failing.empty())
        return {};
    // Report a maximal offender.
    return {false, maximal(l.poset(), failing).front()};
}

ElementSet upset(const FinitePoset& p, std::span<const Element> s)
{
    ElementSet out;
    for (Element x = 0; x < p.size(); ++x)
        if (std::any_of(s.begin(), s.end(), [&](Element m) { return p.leq(m, x); }))
            out.push_back(x);
    return out;
}

ElementSet downset(const FinitePoset& p, std::span<const Element> s)
{
    ElementSet out;
    for (Element x = 0; x < p.size(); ++x)
        if (std::any_of(s.begin(), s.end(), [&](Element m) { return p.leq(x, m); }))
            out.push_back(x);
    return out;
}

ElementSet minimal(const FinitePoset& p, std::span<const Element> s)
{
    ElementSet out;
    for (auto x : s)
        if (std::none_of(s.begin(), s.end(), [&](Element y) { return p.less(y, x); }))
            out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElementSet maximal(const FinitePoset& p, std::span<const Element> s)
{
    ElementSet out;
    for (auto x : s)
        if (std::none_of(s.begin(), s.end(), [&](Element y) { return p.less(x, y); }))
            out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OrderQueries order_queries(const FinitePoset& p, std::span<const Element> s)
{
    return {upset(p, s), downset(p, s), minimal(p, s), maximal(p, s)};
}

FinitePoset chain_poset(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0)
            pairs.emplace_back(i - 1, i);
    }
    return validate_poset(std::move(labels), pairs);
}

FinitePoset antichain_poset(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return validate_poset(std::move(labels), std::span<const std::pair<Element, Element>>{});
}

FiniteLattice diamond_m3()
{
    std::vector<std::pair<Element, Element>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    return FiniteLattice(validate_poset({"bot", "a", "b", "c", "top"}, pairs));
}

FiniteLattice pentagon_n5()
{
    std::vector<std::pair<Element, Element>> pairs{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    return FiniteLattice(validate_poset({"bot", "a", "b", "c", "top"}, pairs));
}

} // namespace duality

#include <algorithm>

#include "duality/backend.hpp"
#include "duality/parallel.hpp"

namespace duality {

DigraphBackend::DigraphBackend(const DigraphBackendOptions& opts) : opts_(opts)
{
    if (opts_.bound > opts_.enumeration_cap)
        throw SizeLimit("bound " + std::to_string(opts_.bound) + " exceeds the enumeration cap of "
                        + std::to_string(opts_.enumeration_cap));

    auto classes = enumerate_digraphs(opts_.bound, EnumerationOptions{opts_.enumeration_cap});
    std::vector<Digraph> cores(classes.size());
    parallel_for(classes.size(), [&](std::size_t i) { cores[i] = core(classes[i]); });

    std::vector<char> seen;
    for (auto& c : cores) {
        auto h = intern_core(std::move(c));
        if (h >= seen.size())
            seen.resize(h + 1, 0);
        if (!seen[h]) {
            seen[h] = 1;
            universe_.push_back(h);
        }
    }
    bottom_ = intern_core(Digraph());
    top_ = intern_core(looped_vertex());
}

Elem DigraphBackend::intern_core(Digraph c) const
{
    std::lock_guard lock(mutex_);
    if (c.vertex_count() <= canonical_vertex_cap) {
        auto key = canonical_key(c);
        if (auto it = by_key_.find(key); it != by_key_.end())
            return it->second;
        const auto h = cores_.size();
        cores_.push_back(std::make_unique<Digraph>(canonical_form(c)));
        by_key_.emplace(key, h);
        return h;
    }
    // Hom-equivalent cores are isomorphic.
    auto& bucket = large_[{c.vertex_count(), c.arc_count()}];
    for (auto h : bucket)
        if (hom_exists(c, *cores_[h]) && hom_exists(*cores_[h], c))
            return h;
    const auto h = cores_.size();
    cores_.push_back(std::make_unique<Digraph>(std::move(c)));
    bucket.push_back(h);
    return h;
}

Elem DigraphBackend::intern(const Digraph& g) const { return intern_core(core(g)); }

const Digraph& DigraphBackend::core_of(Elem a) const
{
    std::lock_guard lock(mutex_);
    return *cores_.at(a);
}

bool DigraphBackend::leq(Elem a, Elem b) const
{
    if (a == b)
        return true;
    const auto key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    {
        std::lock_guard lock(mutex_);
        if (auto it = leq_cache_.find(key); it != leq_cache_.end())
            return it->second;
    }
    const bool result = hom_exists(core_of(a), core_of(b));
    std::lock_guard lock(mutex_);
    leq_cache_.emplace(key, result);
    return result;
}

Elem DigraphBackend::join(Elem a, Elem b) const
{
    if (leq(a, b))
        return b;
    if (leq(b, a))
        return a;
    return intern(coproduct(core_of(a), core_of(b)));
}

Elem DigraphBackend::meet(Elem a, Elem b) const
{
    if (leq(a, b))
        return a;
    if (leq(b, a))
        return b;
    return intern(product(core_of(a), core_of(b)));
}

ElemSet DigraphBackend::components(Elem a) const
{
    const auto& g = core_of(a);
    if (g.empty())
        return {a};
    // Components of a core are cores and pairwise incomparable.
    ElemSet out;
    for (auto& c : weak_components(g))
        out.push_back(intern_core(std::move(c)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string DigraphBackend::describe(Elem a) const { return digraph_to_json(core_of(a)); }

nlohmann::ordered_json DigraphBackend::to_json(Elem a) const
{
    const auto& g = core_of(a);
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto arcs = nlohmann::ordered_json::array();
    for (auto [u, v] : g.arcs())
        arcs.push_back({u, v});
    doc["arcs"] = std::move(arcs);
    return doc;
}

std::optional<bool> DigraphBackend::structural_wld(Elem a) const
{
    // Weak left duals of the digraph order are exactly the cores that are
    // orientations of forests.
    return is_forest_orientation(core_of(a));
}

std::optional<bool> DigraphBackend::structural_below_wld(Elem a) const
{
    // The image of a core inside a forest is a forest, so forests are down-closed.
    return is_forest_orientation(core_of(a));
}

std::optional<Elem> DigraphBackend::catalog_dual(Elem a) const
{
    const auto& g = core_of(a);
    if (g.empty() || g.vertex_count() > canonical_vertex_cap)
        return std::nullopt;
    const int k = static_cast<int>(g.vertex_count()) - 1;
    if (k < 1 || g.arc_count() != static_cast<std::size_t>(k))
        return std::nullopt;
    if (!is_isomorphic(g, directed_path(k)))
        return std::nullopt;
    return intern(transitive_tournament(k));
}

} // namespace duality

#include "duality/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace duality {

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs))
{
    for (auto [u, v] : arcs_)
        if (u >= n_ || v >= n_)
            throw InvalidParameter("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for "
                                   + std::to_string(n_) + " vertices");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& row : in_)
        std::sort(row.begin(), row.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const
{
    const auto& row = out_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Digraph Digraph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> index(n_, static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    for (auto [u, v] : arcs_)
        if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1))
            arcs.emplace_back(index[u], index[v]);
    return Digraph(keep.size(), std::move(arcs));
}

Digraph Digraph::without_vertex(Vertex v) const
{
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v)
            keep.push_back(u);
    return induced(keep);
}

Digraph Digraph::relabelled(std::span<const Vertex> new_label_of) const
{
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (auto [u, v] : arcs_)
        arcs.emplace_back(new_label_of[u], new_label_of[v]);
    return Digraph(n_, std::move(arcs));
}

Digraph Digraph::reversed() const
{
    std::vector<Arc> arcs;
    for (auto [u, v] : arcs_)
        arcs.emplace_back(v, u);
    return Digraph(n_, std::move(arcs));
}

bool is_homomorphism(const Digraph& g, const Digraph& h, const Hom& f)
{
    if (f.map.size() != g.vertex_count())
        return false;
    for (auto v : f.map)
        if (v >= h.vertex_count())
            return false;
    return std::all_of(g.arcs().begin(), g.arcs().end(),
                       [&](const Arc& a) { return h.has_arc(f.map[a.first], f.map[a.second]); });
}

Digraph coproduct(std::span<const Digraph> gs)
{
    std::size_t n = 0;
    std::vector<Arc> arcs;
    for (const auto& g : gs) {
        for (auto [u, v] : g.arcs())
            arcs.emplace_back(static_cast<Vertex>(u + n), static_cast<Vertex>(v + n));
        n += g.vertex_count();
    }
    return Digraph(n, std::move(arcs));
}

Digraph coproduct(const Digraph& a, const Digraph& b)
{
    const Digraph both[] = {a, b};
    return coproduct(both);
}

Digraph product(const Digraph& g, const Digraph& h)
{
    const auto m = h.vertex_count();
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count() * h.arc_count());
    for (auto [u, v] : g.arcs())
        for (auto [x, y] : h.arcs())
            arcs.emplace_back(static_cast<Vertex>(u * m + x), static_cast<Vertex>(v * m + y));
    return Digraph(g.vertex_count() * m, std::move(arcs));
}

Digraph exponential(const Digraph& c, const Digraph& b, const ExponentialOptions& opts)
{
    const auto nb = b.vertex_count();
    const auto nc = c.vertex_count();

    std::size_t count = 1;
    for (std::size_t i = 0; i < nb; ++i) {
        if (nc == 0) {
            count = 0;
            break;
        }
        if (count > opts.max_vertices / nc)
            throw SizeLimit("exponential would have " + std::to_string(nc) + "^" + std::to_string(nb)
                            + " vertices, above the cap of " + std::to_string(opts.max_vertices));
        count *= nc;
    }
    if (count > opts.max_vertices)
        throw SizeLimit("exponential exceeds the cap of " + std::to_string(opts.max_vertices) + " vertices");

    std::vector<std::size_t> weight(nb, 1);
    for (std::size_t i = 1; i < nb; ++i)
        weight[i] = weight[i - 1] * nc;

    std::vector<Arc> arcs;
    std::vector<Vertex> f(nb, 0);
    std::vector<std::vector<Vertex>> allowed(nb);
    std::vector<char> mark(nc, 0);
    for (std::size_t code = 0; code < count; ++code) {
        for (std::size_t i = 0, rest = code; i < nb; ++i, rest /= nc)
            f[i] = static_cast<Vertex>(rest % nc);

        // g(v) must lie in the intersection of out_C(f(u)) over arcs u -> v of B.
        bool possible = true;
        for (Vertex v = 0; v < nb && possible; ++v) {
            const auto& preds = b.in_neighbours(v);
            allowed[v].clear();
            if (preds.empty()) {
                allowed[v].resize(nc);
                std::iota(allowed[v].begin(), allowed[v].end(), Vertex{0});
                continue;
            }
            allowed[v] = c.out_neighbours(f[preds[0]]);
            for (std::size_t k = 1; k < preds.size() && !allowed[v].empty(); ++k) {
                for (auto w : c.out_neighbours(f[preds[k]]))
                    mark[w] = 1;
                std::erase_if(allowed[v], [&](Vertex w) { return mark[w] == 0; });
                for (auto w : c.out_neighbours(f[preds[k]]))
                    mark[w] = 0;
            }
            possible = !allowed[v].empty();
        }
        if (!possible)
            continue;

        std::vector<std::size_t> pos(nb, 0);
        while (true) {
            std::size_t target = 0;
            for (std::size_t i = 0; i < nb; ++i)
                target += allowed[i][pos[i]] * weight[i];
            arcs.emplace_back(static_cast<Vertex>(code), static_cast<Vertex>(target));
            std::size_t i = 0;
            while (i < nb && ++pos[i] == allowed[i].size())
                pos[i++] = 0;
            if (i == nb)
                break;
        }
    }
    return Digraph(count, std::move(arcs));
}

Digraph core(const Digraph& g)
{
    Digraph current = g;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (Vertex v = 0; v < current.vertex_count(); ++v) {
            auto sub = current.without_vertex(v);
            auto f = find_hom(current, sub);
            if (!f)
                continue;
            // The image of f is an induced subgraph of `current` it retracts onto.
            std::vector<Vertex> image;
            for (auto w : f->map)
                image.push_back(w < v ? w : w + 1);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            current = current.induced(image);
            shrunk = true;
            break;
        }
    }
    return current;
}

bool is_core(const Digraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (hom_exists(g, g.without_vertex(v)))
            return false;
    return true;
}

std::vector<Digraph> weak_components(const Digraph& g)
{
    const auto n = g.vertex_count();
    std::vector<Vertex> comp(n, static_cast<Vertex>(-1));
    std::vector<Digraph> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != static_cast<Vertex>(-1))
            continue;
        std::vector<Vertex> members{s}, stack{s};
        comp[s] = s;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto* nbrs : {&g.out_neighbours(v), &g.in_neighbours(v)})
                for (auto w : *nbrs)
                    if (comp[w] == static_cast<Vertex>(-1)) {
                        comp[w] = s;
                        members.push_back(w);
                        stack.push_back(w);
                    }
        }
        std::sort(members.begin(), members.end());
        out.push_back(g.induced(members));
    }
    return out;
}

bool is_forest_orientation(const Digraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.has_loop(v))
            return false;
    // Opposite arcs are parallel edges of the underlying multigraph, so every
    // arc is an edge and a forest has exactly n - c of them.
    return g.arc_count() + weak_components(g).size() == g.vertex_count();
}

Digraph directed_path(int k)
{
    if (k < 0)
        throw InvalidParameter("directed_path needs k >= 0");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        arcs.emplace_back(i, i + 1);
    return Digraph(static_cast<std::size_t>(k) + 1, std::move(arcs));
}

Digraph transitive_tournament(int k)
{
    if (k < 1)
        throw InvalidParameter("transitive_tournament needs k >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            arcs.emplace_back(i, j);
    return Digraph(static_cast<std::size_t>(k), std::move(arcs));
}

Digraph directed_cycle(int k)
{
    if (k < 1)
        throw InvalidParameter("directed_cycle needs k >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        arcs.emplace_back(i, (i + 1) % k);
    return Digraph(static_cast<std::size_t>(k), std::move(arcs));
}

Digraph looped_vertex() { return Digraph(1, {{0, 0}}); }

bool looks_like_generator(const std::string& spec)
{
    return spec == "loop" || spec == "empty" || spec.rfind("path:", 0) == 0 || spec.rfind("tt:", 0) == 0
        || spec.rfind("cycle:", 0) == 0;
}

Digraph parse_generator(const std::string& spec)
{
    if (spec == "loop")
        return looped_vertex();
    if (spec == "empty")
        return Digraph();
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("unknown digraph generator '" + spec + "'");
    auto family = spec.substr(0, colon);
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1)
            throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError("bad generator parameter in '" + spec + "'");
    }
    if (family == "path")
        return directed_path(k);
    if (family == "tt")
        return transitive_tournament(k);
    if (family == "cycle")
        return directed_cycle(k);
    throw ParseError("unknown digraph generator '" + spec + "'");
}

} // namespace duality

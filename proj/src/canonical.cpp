#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "duality/digraph.hpp"
#include "duality/parallel.hpp"

namespace duality {

namespace {

    struct Labelling {
        std::uint64_t code = 0;
        std::vector<Vertex> order; // order[p] = vertex placed at position p
    };

    // Backtracking over relabellings that keep vertices sorted by
    // (loop, out-degree, in-degree), pruning on the layered code prefix.
    class CanonicalSearch {
    public:
        explicit CanonicalSearch(const Digraph& g) : n_(g.vertex_count())
        {
            bits_.assign(n_ * n_, 0);
            for (auto [u, v] : g.arcs())
                bits_[u * n_ + v] = 1;
            inv_.resize(n_);
            for (Vertex v = 0; v < n_; ++v)
                inv_[v] = (static_cast<std::uint32_t>(g.has_loop(v)) << 16)
                    | (static_cast<std::uint32_t>(g.out_neighbours(v).size()) << 8)
                    | static_cast<std::uint32_t>(g.in_neighbours(v).size());
            sorted_inv_ = inv_;
            std::sort(sorted_inv_.begin(), sorted_inv_.end());
            used_.assign(n_, 0);
            order_.resize(n_);
        }

        Labelling run()
        {
            if (n_ > 0)
                extend(0, 0);
            return {best_code_, best_order_};
        }

    private:
        bool arc(Vertex u, Vertex v) const { return bits_[u * n_ + v] != 0; }

        void extend(std::size_t p, std::uint64_t code)
        {
            const auto layer_bits = 2 * p + 1;
            const auto prefix_bits = (p + 1) * (p + 1);
            const auto total_bits = n_ * n_;
            for (Vertex v = 0; v < n_; ++v) {
                if (used_[v] || inv_[v] != sorted_inv_[p])
                    continue;
                std::uint64_t layer = arc(v, v) ? 1 : 0;
                for (std::size_t i = 0; i < p; ++i) {
                    layer = (layer << 1) | (arc(order_[i], v) ? 1 : 0);
                    layer = (layer << 1) | (arc(v, order_[i]) ? 1 : 0);
                }
                const auto next = (code << layer_bits) | layer;
                if (have_best_) {
                    const auto best_prefix = total_bits - prefix_bits >= 64 ? 0 : best_code_ >> (total_bits - prefix_bits);
                    if (next > best_prefix)
                        continue;
                }
                used_[v] = 1;
                order_[p] = v;
                if (p + 1 == n_) {
                    if (!have_best_ || next < best_code_) {
                        best_code_ = next;
                        best_order_ = order_;
                        have_best_ = true;
                    }
                } else {
                    extend(p + 1, next);
                }
                used_[v] = 0;
            }
        }

        std::size_t n_;
        std::vector<char> bits_;
        std::vector<std::uint32_t> inv_, sorted_inv_;
        std::vector<char> used_;
        std::vector<Vertex> order_;
        bool have_best_ = false;
        std::uint64_t best_code_ = 0;
        std::vector<Vertex> best_order_;
    };

    Labelling canonical_labelling(const Digraph& g)
    {
        if (g.vertex_count() > canonical_vertex_cap)
            throw SizeLimit("canonical labelling is limited to " + std::to_string(canonical_vertex_cap)
                            + " vertices, got " + std::to_string(g.vertex_count()));
        return CanonicalSearch(g).run();
    }

} // namespace

CanonicalKey canonical_key(const Digraph& g)
{
    auto lab = canonical_labelling(g);
    return {static_cast<std::uint8_t>(g.vertex_count()), lab.code};
}

Digraph canonical_form(const Digraph& g)
{
    auto lab = canonical_labelling(g);
    std::vector<Vertex> new_label(g.vertex_count());
    for (std::size_t p = 0; p < lab.order.size(); ++p)
        new_label[lab.order[p]] = static_cast<Vertex>(p);
    return g.relabelled(new_label);
}

Digraph digraph_from_key(const CanonicalKey& key)
{
    const std::size_t n = key.n;
    std::vector<Arc> arcs;
    int bit = static_cast<int>(n * n) - 1;
    auto next = [&] { return ((key.code >> bit--) & 1U) != 0; };
    for (Vertex p = 0; p < n; ++p) {
        if (next())
            arcs.emplace_back(p, p);
        for (Vertex i = 0; i < p; ++i) {
            if (next())
                arcs.emplace_back(i, p);
            if (next())
                arcs.emplace_back(p, i);
        }
    }
    return Digraph(n, std::move(arcs));
}

bool is_isomorphic(const Digraph& a, const Digraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
        return false;
    return canonical_key(a) == canonical_key(b);
}

namespace {

    std::vector<CanonicalKey> extend_by_vertex(const std::vector<CanonicalKey>& previous, std::size_t n)
    {
        // Every n-vertex digraph is some (n-1)-vertex digraph plus a new last vertex.
        const std::size_t old = n - 1;
        const std::uint64_t patterns = std::uint64_t{1} << (2 * old + 1);
        std::vector<std::vector<CanonicalKey>> partial(previous.size());
        parallel_for(previous.size(), [&](std::size_t idx) {
            auto base = digraph_from_key(previous[idx]);
            std::set<CanonicalKey> seen;
            for (std::uint64_t mask = 0; mask < patterns; ++mask) {
                auto arcs = base.arcs();
                const auto v = static_cast<Vertex>(old);
                if (mask & 1U)
                    arcs.emplace_back(v, v);
                for (Vertex i = 0; i < old; ++i) {
                    if ((mask >> (2 * i + 1)) & 1U)
                        arcs.emplace_back(i, v);
                    if ((mask >> (2 * i + 2)) & 1U)
                        arcs.emplace_back(v, i);
                }
                seen.insert(canonical_key(Digraph(n, std::move(arcs))));
            }
            partial[idx].assign(seen.begin(), seen.end());
        });

        std::vector<CanonicalKey> all;
        for (auto& p : partial)
            all.insert(all.end(), p.begin(), p.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }

    // Per-size class lists, computed once per process.
    const std::vector<CanonicalKey>& classes_with(std::size_t n)
    {
        static std::mutex mutex;
        static std::map<std::size_t, std::vector<CanonicalKey>> cache;
        std::lock_guard lock(mutex);
        if (cache.empty())
            cache[0] = {CanonicalKey{0, 0}};
        for (std::size_t k = 1; k <= n; ++k)
            if (!cache.contains(k))
                cache[k] = extend_by_vertex(cache[k - 1], k);
        return cache[n];
    }

    void check_enumeration_cap(std::size_t n_max, const EnumerationOptions& opts)
    {
        if (n_max > opts.max_vertices)
            throw SizeLimit("enumeration up to " + std::to_string(n_max) + " vertices exceeds the cap of "
                            + std::to_string(opts.max_vertices));
        if (n_max > canonical_vertex_cap)
            throw SizeLimit("enumeration is limited to " + std::to_string(canonical_vertex_cap) + " vertices");
    }

} // namespace

std::vector<Digraph> enumerate_digraphs(std::size_t n_max, const EnumerationOptions& opts)
{
    check_enumeration_cap(n_max, opts);
    std::vector<Digraph> out;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (const auto& key : classes_with(n))
            out.push_back(digraph_from_key(key));
    return out;
}

std::vector<std::size_t> class_counts(std::size_t n_max, const EnumerationOptions& opts)
{
    check_enumeration_cap(n_max, opts);
    std::vector<std::size_t> counts;
    for (std::size_t n = 0; n <= n_max; ++n)
        counts.push_back(classes_with(n).size());
    return counts;
}

} // namespace duality

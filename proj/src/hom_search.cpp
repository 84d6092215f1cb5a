#include <algorithm>
#include <bit>

#include "duality/digraph.hpp"

namespace duality {

namespace {

    class Bitset {
    public:
        explicit Bitset(std::size_t n = 0, bool full = false) : words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0)
        {
            if (full && n % 64 != 0)
                words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
        }

        bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
        void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        void clear() { std::fill(words_.begin(), words_.end(), 0); }

        std::size_t count() const
        {
            std::size_t c = 0;
            for (auto w : words_)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        bool none() const
        {
            return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
        }

        template <typename F>
        void for_each(F&& f) const
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                for (auto w = words_[i]; w != 0; w &= w - 1)
                    f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }

        // Keep only members that occur in `list`.
        void restrict_to(const std::vector<Vertex>& list)
        {
            scratch_.assign(words_.size(), 0);
            for (auto y : list)
                if (test(y))
                    scratch_[y / 64] |= std::uint64_t{1} << (y % 64);
            words_.swap(scratch_);
        }

        bool intersects(const std::vector<Vertex>& list) const
        {
            return std::any_of(list.begin(), list.end(), [&](Vertex y) { return test(y); });
        }

    private:
        std::vector<std::uint64_t> words_;
        std::vector<std::uint64_t> scratch_;
    };

    class HomSearch {
    public:
        HomSearch(const Digraph& g, const Digraph& h) : g_(g), h_(h) {}

        std::optional<Hom> run()
        {
            const auto n = g_.vertex_count();
            if (n == 0)
                return Hom{};
            if (h_.vertex_count() == 0)
                return std::nullopt;

            Bitset looped(h_.vertex_count());
            for (Vertex x = 0; x < h_.vertex_count(); ++x)
                if (h_.has_loop(x))
                    looped.set(x);

            std::vector<Bitset> domains;
            domains.reserve(n);
            for (Vertex v = 0; v < n; ++v) {
                if (g_.has_loop(v)) {
                    domains.push_back(looped);
                } else {
                    domains.emplace_back(h_.vertex_count(), true);
                }
            }
            if (!arc_consistency(domains))
                return std::nullopt;

            std::vector<char> assigned(n, 0);
            if (!search(domains, assigned))
                return std::nullopt;

            Hom f;
            f.map.resize(n);
            for (Vertex v = 0; v < n; ++v)
                domains[v].for_each([&](std::size_t x) { f.map[v] = static_cast<Vertex>(x); });
            return f;
        }

    private:
        // Prune every domain value lacking support along some arc, to a fixpoint.
        bool arc_consistency(std::vector<Bitset>& d)
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto [u, w] : g_.arcs()) {
                    std::vector<std::size_t> drop;
                    d[u].for_each([&](std::size_t x) {
                        if (!d[w].intersects(h_.out_neighbours(static_cast<Vertex>(x))))
                            drop.push_back(x);
                    });
                    for (auto x : drop)
                        d[u].reset(x);
                    changed |= !drop.empty();
                    if (d[u].none())
                        return false;

                    drop.clear();
                    d[w].for_each([&](std::size_t y) {
                        if (!d[u].intersects(h_.in_neighbours(static_cast<Vertex>(y))))
                            drop.push_back(y);
                    });
                    for (auto y : drop)
                        d[w].reset(y);
                    changed |= !drop.empty();
                    if (d[w].none())
                        return false;
                }
            }
            return true;
        }

        bool search(std::vector<Bitset>& d, std::vector<char>& assigned)
        {
            const auto n = g_.vertex_count();
            std::size_t best = n, best_size = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (assigned[v])
                    continue;
                auto sz = d[v].count();
                if (best == n || sz < best_size) {
                    best = v;
                    best_size = sz;
                }
            }
            if (best == n)
                return true;

            const auto v = static_cast<Vertex>(best);
            std::vector<std::size_t> values;
            d[v].for_each([&](std::size_t x) { values.push_back(x); });

            assigned[v] = 1;
            for (auto x : values) {
                auto next = d;
                next[v].clear();
                next[v].set(x);
                bool ok = true;
                for (auto w : g_.out_neighbours(v)) {
                    next[w].restrict_to(h_.out_neighbours(static_cast<Vertex>(x)));
                    if (next[w].none()) {
                        ok = false;
                        break;
                    }
                }
                for (auto w : g_.in_neighbours(v)) {
                    if (!ok)
                        break;
                    next[w].restrict_to(h_.in_neighbours(static_cast<Vertex>(x)));
                    if (next[w].none())
                        ok = false;
                }
                if (ok && search(next, assigned)) {
                    d = std::move(next);
                    return true;
                }
            }
            assigned[v] = 0;
            return false;
        }

        const Digraph& g_;
        const Digraph& h_;
    };

} // namespace

std::optional<Hom> find_hom(const Digraph& g, const Digraph& h) { return HomSearch(g, h).run(); }

bool hom_exists(const Digraph& g, const Digraph& h) { return find_hom(g, h).has_value(); }

} // namespace duality

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "duality/error.hpp"

namespace duality {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// Finite directed graph on vertices 0..n-1. Loops are allowed, parallel arcs
// are not. Immutable once built; arcs are kept sorted.
class Digraph {
public:
    Digraph() = default;
    // Throws InvalidParameter on out-of-range endpoints. Duplicate arcs collapse.
    Digraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return n_ == 0; }

    bool has_arc(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return has_arc(v, v); }
    const std::vector<Vertex>& out_neighbours(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbours(Vertex v) const { return in_[v]; }

    // Induced subdigraph on `keep` (sorted), relabelled in increasing order.
    Digraph induced(std::span<const Vertex> keep) const;
    Digraph without_vertex(Vertex v) const;
    Digraph relabelled(std::span<const Vertex> new_label_of) const;
    Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// A vertex map from a source digraph into a target digraph.
struct Hom {
    std::vector<Vertex> map;
};

bool is_homomorphism(const Digraph& g, const Digraph& h, const Hom& f);

// Backtracking with arc-consistency; most-constrained vertex first, ties by index.
std::optional<Hom> find_hom(const Digraph& g, const Digraph& h);
bool hom_exists(const Digraph& g, const Digraph& h);

Digraph coproduct(std::span<const Digraph> gs);
Digraph coproduct(const Digraph& a, const Digraph& b);

// Vertex (u, x) is numbered u * |V(H)| + x.
Digraph product(const Digraph& g, const Digraph& h);

struct ExponentialOptions {
    std::size_t max_vertices = 1'000'000;
};

// Vertices are functions V(B) -> V(C) encoded in base |V(C)| with B-vertex 0 as
// the least significant digit; f -> g iff (f(u), g(v)) is an arc of C for every
// arc (u, v) of B.
Digraph exponential(const Digraph& c, const Digraph& b, const ExponentialOptions& opts = {});

// Smallest retract, found by repeatedly retracting onto the image of a
// homomorphism into G minus one vertex (lowest vertex first).
Digraph core(const Digraph& g);
bool is_core(const Digraph& g);

// Components of the underlying undirected graph, ordered by least vertex.
std::vector<Digraph> weak_components(const Digraph& g);

// Underlying multigraph acyclic: no loops and no opposite arc pairs count as trees.
bool is_forest_orientation(const Digraph& g);

// ---- Generators ------------------------------------------------------------

Digraph directed_path(int k);         // k arcs, k + 1 vertices
Digraph transitive_tournament(int k); // k vertices, i -> j for i < j, k >= 1
Digraph directed_cycle(int k);        // k >= 1; directed_cycle(1) is a single loop
Digraph looped_vertex();

// path:k, tt:k, cycle:k, loop, empty
Digraph parse_generator(const std::string& spec);
bool looks_like_generator(const std::string& spec);

// ---- Canonical form and enumeration -----------------------------------------

inline constexpr std::size_t canonical_vertex_cap = 8;

// Adjacency bits of the lexicographically least relabelling, read layer by
// layer (vertex p's loop, then arcs between p and earlier vertices).
struct CanonicalKey {
    std::uint8_t n = 0;
    std::uint64_t code = 0;
    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept
    {
        return std::hash<std::uint64_t>{}(k.code * 31 + k.n);
    }
};

// Throws SizeLimit above canonical_vertex_cap vertices.
CanonicalKey canonical_key(const Digraph& g);
Digraph canonical_form(const Digraph& g);
Digraph digraph_from_key(const CanonicalKey& key);
bool is_isomorphic(const Digraph& a, const Digraph& b);

struct EnumerationOptions {
    std::size_t max_vertices = 5;
};

// One canonical representative per isomorphism class with at most n_max
// vertices, ordered by vertex count then canonical code.
std::vector<Digraph> enumerate_digraphs(std::size_t n_max, const EnumerationOptions& opts = {});
std::vector<std::size_t> class_counts(std::size_t n_max, const EnumerationOptions& opts = {});

// ---- I/O -------------------------------------------------------------------

// {"n": 3, "arcs": [[0, 1], [1, 2]]}, or an adjacency matrix of 0/1 rows.
Digraph parse_digraph(const std::string& text);
Digraph load_digraph_file(const std::string& path);
std::string digraph_to_json(const Digraph& g);
std::string digraph_dot(const Digraph& g, const std::string& name = "G");

} // namespace duality

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "duality/digraph.hpp"
#include "duality/lattice.hpp"
#include "json.hpp"

namespace duality {

// Handle of an element of an order backend. Handles are canonical: two
// handles are equal iff the elements are order-equivalent.
using Elem = std::size_t;
using ElemSet = std::vector<Elem>; // sorted by handle, duplicate-free

// The order-theoretic arena a duality computation runs in.
class OrderBackend {
public:
    virtual ~OrderBackend() = default;

    virtual bool leq(Elem a, Elem b) const = 0;
    virtual Elem join(Elem a, Elem b) const = 0;
    virtual Elem meet(Elem a, Elem b) const = 0;
    virtual Elem bottom() const = 0;
    virtual Elem top() const = 0;

    // Pairwise incomparable connected elements whose join is `a`.
    virtual ElemSet components(Elem a) const = 0;

    // Representatives up to the backend's bound, in canonical order.
    virtual const std::vector<Elem>& universe() const = 0;
    // True when universe() is the whole order.
    virtual bool exhaustive() const = 0;
    virtual std::size_t bound() const = 0;

    virtual std::string describe(Elem a) const = 0;
    virtual nlohmann::ordered_json to_json(Elem a) const = 0;

    // Weak-left-dual membership known from the structure of the backend,
    // when it cannot be derived by exhaustive search.
    virtual std::optional<bool> structural_wld(Elem) const { return std::nullopt; }
    // Same for membership in the down-closure of the weak left duals.
    virtual std::optional<bool> structural_below_wld(Elem) const { return std::nullopt; }
    // Right dual taken from a catalog of known pairs, unverified.
    virtual std::optional<Elem> catalog_dual(Elem) const { return std::nullopt; }

    bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
    bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
};

// An explicit finite lattice; the universe is every element.
class LatticeBackend final : public OrderBackend {
public:
    explicit LatticeBackend(FiniteLattice l);

    const FiniteLattice& lattice() const { return lattice_; }
    const ConnectedSet& connected() const { return connected_; }
    Elem element(const std::string& label) const { return lattice_.poset().index_of(label); }

    bool leq(Elem a, Elem b) const override { return lattice_.leq(a, b); }
    Elem join(Elem a, Elem b) const override { return lattice_.join(a, b); }
    Elem meet(Elem a, Elem b) const override { return lattice_.meet(a, b); }
    Elem bottom() const override { return lattice_.bottom(); }
    Elem top() const override { return lattice_.top(); }
    ElemSet components(Elem a) const override;
    const std::vector<Elem>& universe() const override { return universe_; }
    bool exhaustive() const override { return true; }
    std::size_t bound() const override { return lattice_.size(); }
    std::string describe(Elem a) const override { return lattice_.label(a); }
    nlohmann::ordered_json to_json(Elem a) const override { return lattice_.label(a); }

private:
    FiniteLattice lattice_;
    ConnectedSet connected_;
    std::vector<Elem> universe_;
};

struct DigraphBackendOptions {
    std::size_t bound = 4;
    std::size_t enumeration_cap = 5;
};

// The homomorphism order of finite digraphs. Every element is stored as its
// core; the universe is the set of cores on at most `bound` vertices.
// Interning is internally synchronised, so const methods are thread-safe.
class DigraphBackend final : public OrderBackend {
public:
    explicit DigraphBackend(const DigraphBackendOptions& opts = {});

    // Handle of the class of g (its core is computed).
    Elem intern(const Digraph& g) const;
    const Digraph& core_of(Elem a) const;

    bool leq(Elem a, Elem b) const override;
    Elem join(Elem a, Elem b) const override;
    Elem meet(Elem a, Elem b) const override;
    Elem bottom() const override { return bottom_; }
    Elem top() const override { return top_; }
    ElemSet components(Elem a) const override;
    const std::vector<Elem>& universe() const override { return universe_; }
    bool exhaustive() const override { return false; }
    std::size_t bound() const override { return opts_.bound; }
    std::string describe(Elem a) const override;
    nlohmann::ordered_json to_json(Elem a) const override;

    std::optional<bool> structural_wld(Elem a) const override;
    std::optional<bool> structural_below_wld(Elem a) const override;
    std::optional<Elem> catalog_dual(Elem a) const override;

private:
    Elem intern_core(Digraph core) const;

    DigraphBackendOptions opts_;
    mutable std::mutex mutex_;
    mutable std::vector<std::unique_ptr<Digraph>> cores_;
    mutable std::map<CanonicalKey, Elem> by_key_;
    // Cores too large for canonical keys, bucketed by (vertices, arcs).
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>> large_;
    mutable std::unordered_map<std::uint64_t, bool> leq_cache_;
    std::vector<Elem> universe_;
    Elem bottom_ = 0;
    Elem top_ = 0;
};

} // namespace duality

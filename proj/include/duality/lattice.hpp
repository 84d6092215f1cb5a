#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "duality/error.hpp"

namespace duality {

// Elements of a finite poset are indices into a stable label array.
using Element = std::size_t;
using ElementSet = std::vector<Element>; // sorted, duplicate-free

// A finite partial order stored as a dense n x n incidence table.
class FinitePoset {
public:
    FinitePoset() = default;

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element a) const { return labels_.at(a); }
    Element index_of(const std::string& label) const;

    bool leq(Element a, Element b) const { return leq_[a * labels_.size() + b] != 0; }
    bool less(Element a, Element b) const { return a != b && leq(a, b); }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

    // Pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<Element, Element>> covering_pairs() const;

private:
    friend FinitePoset validate_poset(std::vector<std::string>, std::span<const std::pair<Element, Element>>);

    std::vector<std::string> labels_;
    std::vector<char> leq_;
};

// Closes `pairs` reflexively and transitively. Throws DuplicateElement,
// UnknownElement, or CycleError when the closure is not antisymmetric.
FinitePoset validate_poset(std::vector<std::string> elements,
                           std::span<const std::pair<std::string, std::string>> pairs);

// Index-based convenience overload used by generators and tests.
FinitePoset validate_poset(std::vector<std::string> elements,
                           std::span<const std::pair<Element, Element>> pairs);

struct LatticeCheck {
    bool ok = true;
    std::optional<std::pair<Element, Element>> witness;
    std::string reason;
};

// Every pair has a least upper bound and a greatest lower bound.
LatticeCheck is_lattice(const FinitePoset& p);

class FiniteLattice {
public:
    // Throws NotALattice with the offending pair.
    explicit FiniteLattice(FinitePoset p);

    const FinitePoset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    bool leq(Element a, Element b) const { return poset_.leq(a, b); }
    Element join(Element a, Element b) const { return join_[a * size() + b]; }
    Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
    Element bottom() const { return bottom_; }
    Element top() const { return top_; }
    const std::string& label(Element a) const { return poset_.label(a); }

    // Empty join is bottom, empty meet is top.
    Element join_all(std::span<const Element> xs) const;
    Element meet_all(std::span<const Element> xs) const;

private:
    FinitePoset poset_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    Element bottom_ = 0;
    Element top_ = 0;
};

struct DownsetOptions {
    std::size_t max_elements = std::size_t{1} << 20;
};

// Lattice of down-closed subsets ordered by inclusion. Elements are listed by
// increasing bitmask over the poset's points.
FiniteLattice downset_lattice(const FinitePoset& p, const DownsetOptions& opts = {});

struct TripleCheck {
    bool ok = true;
    std::optional<std::tuple<Element, Element, Element>> witness;
};

TripleCheck is_distributive(const FiniteLattice& l);

// Maximum of {a : a /\ b <= c}; throws NotHeyting when it has no maximum.
Element heyting_arrow(const FiniteLattice& l, Element b, Element c);

struct HeytingCheck {
    bool ok = true;
    std::optional<std::pair<Element, Element>> witness;
};

HeytingCheck is_heyting(const FiniteLattice& l);

class HeytingTable {
public:
    explicit HeytingTable(const FiniteLattice& l);
    Element arrow(Element b, Element c) const { return arrow_[b * n_ + c]; }

private:
    std::size_t n_;
    std::vector<Element> arrow_;
};

// The join-prime elements: a <= b \/ c implies a <= b or a <= c.
struct ConnectedSet {
    std::vector<char> member;
    ElementSet members;
    bool contains(Element a) const { return member[a] != 0; }
};

ConnectedSet connected_elements(const FiniteLattice& l);

// max(down(a) /\ Cn). Throws NoDecomposition when the join of the result is not a.
ElementSet components(const FiniteLattice& l, Element a);
ElementSet components(const FiniteLattice& l, const ConnectedSet& cn, Element a);

ElementSet components_of_set(const FiniteLattice& l, std::span<const Element> xs);
ElementSet components_of_set(const FiniteLattice& l, const ConnectedSet& cn, std::span<const Element> xs);

struct DecompositionCheck {
    bool ok = true;
    std::optional<Element> witness;
};

DecompositionCheck has_connected_decompositions(const FiniteLattice& l);

struct OrderQueries {
    ElementSet upset;
    ElementSet downset;
    ElementSet minimal;
    ElementSet maximal;
};

OrderQueries order_queries(const FinitePoset& p, std::span<const Element> s);

ElementSet upset(const FinitePoset& p, std::span<const Element> s);
ElementSet downset(const FinitePoset& p, std::span<const Element> s);
ElementSet minimal(const FinitePoset& p, std::span<const Element> s);
ElementSet maximal(const FinitePoset& p, std::span<const Element> s);

// ---- I/O -------------------------------------------------------------------

// {"elements": [...], "leq": [[a, b], ...]}; leq need not be closed.
FinitePoset parse_poset_json(const std::string& text);
FinitePoset load_poset_file(const std::string& path);
std::string poset_to_json(const FinitePoset& p);

// One node per element, one edge per covering pair.
std::string hasse_dot(const FinitePoset& p);

// ---- Standard examples -----------------------------------------------------

FinitePoset chain_poset(std::size_t n);
FinitePoset antichain_poset(std::size_t n);
// bot < a, b, c < top
FiniteLattice diamond_m3();
// bot < a < b < top, bot < c < top
FiniteLattice pentagon_n5();

} // namespace duality

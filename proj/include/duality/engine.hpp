#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "duality/backend.hpp"

namespace duality {

// ---- Order helpers over a backend --------------------------------------------

ElemSet make_set(std::vector<Elem> xs);
bool in_up(const OrderBackend& bk, Elem x, const ElemSet& s);   // some s <= x
bool in_down(const OrderBackend& bk, Elem x, const ElemSet& s); // some s >= x
ElemSet up_set(const OrderBackend& bk, const ElemSet& s);       // restricted to universe()
ElemSet down_set(const OrderBackend& bk, const ElemSet& s);
ElemSet minimal_of(const OrderBackend& bk, const ElemSet& s);
ElemSet maximal_of(const OrderBackend& bk, const ElemSet& s);
std::optional<std::pair<Elem, Elem>> comparable_pair(const OrderBackend& bk, const ElemSet& s);
bool is_antichain(const OrderBackend& bk, const ElemSet& s);
Elem join_all(const OrderBackend& bk, const ElemSet& s); // empty join is bottom
Elem meet_all(const OrderBackend& bk, const ElemSet& s); // empty meet is top

// ---- Verification status -----------------------------------------------------

enum class VerdictKind { Unchecked, Verified, Refuted, Malformed };

// Verified is a proof when `exhaustive`, otherwise evidence up to `bound`.
struct Verdict {
    VerdictKind kind = VerdictKind::Unchecked;
    std::size_t bound = 0;
    bool exhaustive = false;
    std::optional<Elem> witness;
    std::optional<std::pair<Elem, Elem>> comparable;

    bool verified() const { return kind == VerdictKind::Verified; }
};

struct DualitySpec {
    ElemSet left;
    ElemSet right;
    Verdict status;
    // (A, {}) or ({}, B): admitted by the definition but flagged.
    bool degenerate() const { return left.empty() || right.empty(); }
};

struct Transversal {
    ElemSet members;
    ElemSet complement; // A_Cn minus up(members)
    std::optional<Elem> r;
};

struct EngineOptions {
    bool allow_degenerate = false;
};

// Supplies a right dual for a connected element, or nothing.
using DualOracle = std::function<std::optional<Elem>(const OrderBackend&, Elem)>;

// ---- Duality pairs and finite dualities ----------------------------------------

// l !<= x iff x <= r for every x in the universe.
Verdict is_duality_pair(const OrderBackend& bk, Elem l, Elem r);

// First r of the universe making (l, r) a duality pair.
std::optional<Elem> right_dual_of(const OrderBackend& bk, Elem l);

// Backend catalog entry if it verifies, else right_dual_of.
std::optional<Elem> default_dual_oracle(const OrderBackend& bk, Elem l);

Verdict is_finite_duality(const OrderBackend& bk, const ElemSet& left, const ElemSet& right);

// ---- Transversals ----------------------------------------------------------------

ElemSet components_of_set(const OrderBackend& bk, const ElemSet& a);

// Subsets of A_Cn that are antichains covering A from below.
std::vector<ElemSet> quasitransversals(const OrderBackend& bk, const ElemSet& a);

// Quasitransversals maximal in the refinement order (M <| N iff N within up(M)).
std::vector<Transversal> transversals(const OrderBackend& bk, const ElemSet& a);

// The unique r in B with M /\ down(r) empty and complement(M) within down(r).
// Throws Inconsistent when zero or several candidates qualify.
Elem r_of_transversal(const OrderBackend& bk, const DualitySpec& d, const ElemSet& members);

// A transversal coarser than Min{x in A_Cn : x !<= r} that maps back to r.
Transversal transversal_of_r(const OrderBackend& bk, const DualitySpec& d, Elem r);

struct BijectionCheck {
    bool ok = true;
    std::optional<ElemSet> offending_transversal;
    std::optional<Elem> offending_element;
    std::string message;
};

BijectionCheck check_transversal_bijection(const OrderBackend& bk, const DualitySpec& d);

// (M, {r(M)}) with its own verification status.
DualitySpec duality_of_transversal(const OrderBackend& bk, const DualitySpec& d, const ElemSet& members);

// ---- Constructing dualities --------------------------------------------------------

// For a finite antichain of joins of left duals: one right element per
// transversal, the meet of the right duals of its members. Self-checked.
// Throws MalformedAntichain or MissingRightDual.
DualitySpec build_duality(const OrderBackend& bk, const ElemSet& a, const DualOracle& oracle = {},
                          const EngineOptions& opts = {});

// Minimal elements of { meet over a in A of dual(c(a)) : c(a) a component of a }.
ElemSet min_b_prime(const OrderBackend& bk, const ElemSet& a, const DualOracle& oracle = {});

// (A, {r}) split into duality pairs (l_i, r_i) with r the meet of the r_i.
// Throws MissingRightDual or MeetMismatch.
std::vector<std::pair<Elem, Elem>> decompose_right(const OrderBackend& bk, const DualitySpec& d,
                                                   const DualOracle& oracle = {});

// ---- Gaps ----------------------------------------------------------------------------

// Covering pairs of an exhaustive backend.
std::vector<std::pair<Elem, Elem>> gaps(const OrderBackend& bk);

// A duality pair (l, r) with l /\ r <= a <= r and b = a \/ l. Throws NoWitness.
std::pair<Elem, Elem> gap_witness(const OrderBackend& bk, Elem a, Elem b);

// { (a, a \/ l) : (l, r) a duality pair, l /\ r <= a <= r }.
std::vector<std::pair<Elem, Elem>> gaps_from_duality_pairs(const OrderBackend& bk);

// ---- Weak left duals -------------------------------------------------------------------

enum class Tristate { False, True, Unknown };

struct ComponentDual {
    Elem component;
    std::optional<Elem> dual;
};

struct WldResult {
    Tristate verdict = Tristate::Unknown;
    // "exhaustive", "structural", "degenerate", "bounded"
    std::string basis;
    std::vector<ComponentDual> components;
};

WldResult wld_membership(const OrderBackend& bk, Elem a, const EngineOptions& opts = {});
bool in_wld(const OrderBackend& bk, Elem a, const EngineOptions& opts = {});
bool below_wld(const OrderBackend& bk, Elem a, const EngineOptions& opts = {});

// ---- Antichains --------------------------------------------------------------------------

struct AntichainReport {
    ElemSet antichain;
    bool is_antichain = false;
    bool is_maximal = false; // within the universe
    std::optional<Elem> incomparable_witness;
};

// A union (B minus down(A)).
AntichainReport antichain_from_duality(const OrderBackend& bk, const DualitySpec& d);
bool is_maximal_antichain(const OrderBackend& bk, const ElemSet& c);

struct FromAntichain {
    bool applicable = false;
    std::string reason;
    ElemSet wld_part;       // C /\ wld
    ElemSet below_wld_part; // C /\ down(wld)
    std::optional<DualitySpec> duality;
    ElemSet reconstructed;
    bool matches = false;
};

FromAntichain duality_from_antichain(const OrderBackend& bk, const ElemSet& c, const EngineOptions& opts = {});

struct Split {
    ElemSet above; // A: everything outside C above some member, or
    ElemSet below; // B: below some member
};

// First 2-partition (by bitmask over C in handle order) that splits C.
std::optional<Split> antichain_split(const OrderBackend& bk, const ElemSet& c);

// ---- Sparse incomparability -----------------------------------------------------------------

enum class SiaKind { Witness, NoWitness, PreconditionFails };

struct SiaResult {
    SiaKind kind = SiaKind::NoWitness;
    std::optional<Elem> witness;
    std::size_t bound = 0;
    bool conclusive = false; // NoWitness refutes only in exhaustive backends
};

// Precondition: ({x} u up(U)) /\ wld empty. Searches for y outside wld with
// y <= x, y not in up({x} u U), and y <= m iff x <= m for all m in M.
SiaResult sia_check(const OrderBackend& bk, Elem x, const ElemSet& m, const ElemSet& u,
                    const EngineOptions& opts = {});

struct SiaSweep {
    bool holds = true;
    std::size_t instances = 0; // precondition-satisfying (x, M, U) checked
    std::optional<std::tuple<Elem, ElemSet, ElemSet>> counterexample;
};

// All x in pool and all M, U subsets of pool. Pool size is capped at 10.
SiaSweep sia_sweep(const OrderBackend& bk, const ElemSet& pool, const EngineOptions& opts = {});

} // namespace duality

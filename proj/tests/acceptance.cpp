// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
// The suite runs twice; the second run only feeds the determinism check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "duality/engine.hpp"
#include "duality/report.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace duality;

namespace {

struct Outcome {
    int id;
    std::string title;
    bool pass = true;
    std::string detail;
    double seconds = 0;
    double limit = 0;
};

class Suite {
public:
    std::vector<Outcome> outcomes;
    Json transcript = Json::object();

    template <class F>
    void criterion(int id, std::string title, double limit, F&& body)
    {
        Outcome o{id, std::move(title), true, {}, 0, limit};
        Json entry = Json::object();
        auto start = std::chrono::steady_clock::now();
        try {
            body(o, entry);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit > 0 && o.seconds > limit) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        entry["pass"] = o.pass;
        transcript[std::to_string(id)] = std::move(entry);
        outcomes.push_back(std::move(o));
    }
};

void fail(Outcome& o, const std::string& why)
{
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

std::vector<FiniteLattice> poset_family()
{
    std::vector<FiniteLattice> out;
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& o : oracle::poset_classes(n))
            out.push_back(downset_lattice(oracle::to_poset(o)));
    return out;
}

void report_tally(Outcome& o, const char* name, const sweep::Tally& t)
{
    if (t.checks == 0)
        fail(o, std::string(name) + ": no checks ran");
    else if (!t.ok())
        fail(o, std::string(name) + ": " + t.failures.front());
}

Json run_suite(Suite& s)
{
    const auto family = poset_family();

    s.criterion(1, "lattice sweep over down-set lattices of posets on at most 4 points", 120, [&](Outcome& o, Json& j) {
        sweep::LatticeSweep sw;
        Json lattices = Json::array();
        for (const auto& l : family)
            sweep::sweep_lattice(l, sw, &lattices);
        if (oracle::poset_classes(4).size() != 16)
            fail(o, "expected 16 posets on 4 points");
        report_tally(o, "is_heyting", sw.heyting);
        report_tally(o, "has_connected_decompositions", sw.decompositions);
        report_tally(o, "wld", sw.wld);
        report_tally(o, "uniqueness of B", sw.uniqueness);
        report_tally(o, "transversal bijection", sw.bijection);
        report_tally(o, "sub-dualities", sw.sub_dualities);
        report_tally(o, "component right duals", sw.component_duals);
        report_tally(o, "single transversal", sw.single_transversal);
        report_tally(o, "complements meet", sw.complements_meet);
        report_tally(o, "maximal antichain", sw.maximal_antichain);
        report_tally(o, "reconstruction", sw.reconstruction);
        report_tally(o, "right meets", sw.right_meets);
        report_tally(o, "components of joins", sw.components_of_joins);
        report_tally(o, "antichain lemma", sw.antichain_lemma);
        if (o.pass)
            o.detail = std::to_string(family.size()) + " lattices, " + std::to_string(sw.dualities) + " dualities";
        j["lattices"] = std::move(lattices);
        j["dualities"] = sw.dualities;
    });

    s.criterion(2, "gaps: covering-pair scan equals the duality-pair formula", 60, [&](Outcome& o, Json& j) {
        sweep::Tally t;
        Json gaps = Json::array();
        for (const auto& l : family)
            sweep::sweep_gaps(l, t, &gaps);
        report_tally(o, "gaps", t);
        if (o.pass)
            o.detail = std::to_string(t.checks) + " checks";
        j["gaps"] = std::move(gaps);
    });

    s.criterion(3, "digraph Heyting law hom(AxB, C) iff hom(A, C^B)", 180, [&](Outcome& o, Json& j) {
        auto law = [](const Digraph& a, const Digraph& b, const Digraph& c) {
            bool lhs = oracle::brute_hom_exists(product(a, b), c);
            bool rhs = oracle::brute_hom_exists(a, exponential(c, b));
            return lhs == rhs && hom_exists(product(a, b), c) == lhs;
        };
        const auto two = enumerate_digraphs(2);
        std::size_t exhaustive = 0, bad = 0;
        for (const auto& a : two)
            for (const auto& b : two)
                for (const auto& c : two) {
                    ++exhaustive;
                    bad += !law(a, b, c);
                }
        std::vector<Digraph> three;
        for (auto& g : enumerate_digraphs(3))
            if (g.vertex_count() == 3)
                three.push_back(std::move(g));
        std::mt19937 rng(20240531);
        std::uniform_int_distribution<std::size_t> pick(0, three.size() - 1);
        const std::size_t samples = 1000;
        Json sampled = Json::array();
        for (std::size_t t = 0; t < samples; ++t) {
            auto ia = pick(rng), ib = pick(rng), ic = pick(rng);
            bad += !law(three[ia], three[ib], three[ic]);
            if (t < 20)
                sampled.push_back({ia, ib, ic});
        }
        if (bad)
            fail(o, std::to_string(bad) + " discrepancies");
        else
            o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(samples) + " sampled triples";
        j["exhaustive"] = exhaustive;
        j["first_samples"] = std::move(sampled);
        j["discrepancies"] = bad;
    });

    s.criterion(4, "core contract over digraphs with at most 3 vertices", 120, [&](Outcome& o, Json& j) {
        const auto all = enumerate_digraphs(3);
        std::size_t bad = 0;
        std::vector<CanonicalKey> keys;
        for (const auto& g : all) {
            auto c = core(g);
            keys.push_back(canonical_key(c));
            bool good = oracle::brute_isomorphic(core(c), c) && oracle::brute_hom_exists(g, c)
                && oracle::brute_hom_exists(c, g) && is_core(c) && c.vertex_count() == oracle::brute_core_size(g);
            bad += !good;
        }
        std::size_t equivalent_pairs = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t k = 0; k < all.size(); ++k)
                if (oracle::brute_hom_exists(all[i], all[k]) && oracle::brute_hom_exists(all[k], all[i])) {
                    ++equivalent_pairs;
                    bad += keys[i] != keys[k];
                }
        if (bad)
            fail(o, std::to_string(bad) + " discrepancies");
        else
            o.detail = std::to_string(all.size()) + " digraphs, " + std::to_string(equivalent_pairs)
                + " hom-equivalent pairs";
        j["digraphs"] = all.size();
        j["equivalent_pairs"] = equivalent_pairs;
        j["discrepancies"] = bad;
    });

    s.criterion(5, "Gallai-Roy pairs (P_k, TT_k), k = 1..3, at bound 4", 300, [&](Outcome& o, Json& j) {
        DigraphBackend bk({4, 5});
        Json pairs = Json::array();
        for (int k = 1; k <= 3; ++k) {
            auto p = bk.intern(directed_path(k)), t = bk.intern(transitive_tournament(k));
            auto v = is_duality_pair(bk, p, t);
            if (!v.verified() || v.bound != 4)
                fail(o, "is_duality_pair failed for k = " + std::to_string(k));
            auto d = build_duality(bk, {p});
            if (d.right != ElemSet{t} || !d.status.verified() || d.status.bound != 4)
                fail(o, "build_duality did not return TT_" + std::to_string(k));
            pairs.push_back({{"k", k}, {"pair", verdict_json(bk, v)}, {"build", duality_json(bk, d)}});
        }
        if (o.pass)
            o.detail = std::to_string(bk.universe().size()) + " cores in the universe";
        j["pairs"] = std::move(pairs);
    });

    s.criterion(6, "negative controls", 10, [&](Outcome& o, Json& j) {
        DigraphBackend b3({3, 5});
        auto c3 = directed_cycle(3), tt2 = transitive_tournament(2);
        auto v = is_finite_duality(b3, {b3.intern(c3)}, {b3.intern(tt2)});
        if (v.kind != VerdictKind::Refuted || !v.witness) {
            fail(o, "C3 / TT2 not refuted at bound 3");
        } else {
            const auto& w = b3.core_of(*v.witness);
            if (w.vertex_count() > 3 || hom_exists(c3, w) != hom_exists(w, tt2))
                fail(o, "witness does not refute");
            j["witness"] = b3.describe(*v.witness);
        }
        DigraphBackend b4({4, 5});
        if (right_dual_of(b4, b4.intern(c3)))
            fail(o, "C3 has a right dual at bound 4");
        LatticeBackend m3(diamond_m3());
        auto dc = has_connected_decompositions(m3.lattice());
        if (dc.ok || !dc.witness || *dc.witness != m3.top())
            fail(o, "M3 decomposition witness is not top");
        else
            j["m3_witness"] = m3.describe(*dc.witness);
        if (o.pass)
            o.detail = "witness " + j["witness"].get<std::string>() + ", C3 NotFound, M3 witness top";
    });

    s.criterion(7, "enumeration counts against Burnside", 10, [&](Outcome& o, Json& j) {
        auto counts = class_counts(2);
        auto up_to_one = counts[0] + counts[1];
        auto burnside_one = oracle::burnside_class_count(0) + oracle::burnside_class_count(1);
        if (up_to_one != 3 || burnside_one != 3)
            fail(o, "n <= 1 gives " + std::to_string(up_to_one));
        if (counts[2] != 10 || oracle::burnside_class_count(2) != 10)
            fail(o, "n = 2 gives " + std::to_string(counts[2]));
        if (o.pass)
            o.detail = "n<=1: 3, n=2: 10";
        j["counts"] = counts;
    });

    return s.transcript;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string path = argc > 1 ? argv[1] : "acceptance_transcript.json";

    Suite first, second;
    auto t1 = run_suite(first).dump(2);
    auto t2 = run_suite(second).dump(2);
    std::ofstream(path) << t1 << '\n';

    Outcome det{8, "determinism: two runs give byte-identical JSON transcripts", t1 == t2, {}, 0, 0};
    det.detail = det.pass ? std::to_string(t1.size()) + " bytes, written to " + path : "transcripts differ";
    first.outcomes.push_back(det);

    bool all = true;
    for (const auto& o : first.outcomes) {
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << o.id << ". " << o.title << ": " << o.detail;
        if (o.limit > 0)
            std::cout << " [" << std::fixed << std::setprecision(2) << o.seconds << "s]";
        std::cout << '\n';
    }
    return all ? 0 : 1;
}

#include "duality/cli.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "duality/report.hpp"

namespace duality {

namespace {

    struct RunConfig {
        std::string backend;
        std::string lattice_file;
        bool digraph = false;
        std::size_t bound = 4;
        std::string output = "text";
        bool allow_degenerate = false;
        std::size_t cap_exponential = ExponentialOptions{}.max_vertices;
        std::size_t cap_enumeration = EnumerationOptions{}.max_vertices;

        bool json() const { return output == "json"; }
        bool dot() const { return output == "dot"; }
        EngineOptions engine() const { return {allow_degenerate}; }
    };

    std::string trim(const std::string& s)
    {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos)
            return {};
        auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(const std::string& s, char sep)
    {
        std::vector<std::string> out;
        std::string cur;
        std::istringstream in(s);
        while (std::getline(in, cur, sep))
            if (auto t = trim(cur); !t.empty())
                out.push_back(t);
        return out;
    }

    // A generator spec, a file, or several of either joined by '+' (disjoint union).
    Digraph resolve_digraph(const std::string& spec)
    {
        std::vector<Digraph> parts;
        for (const auto& item : split(spec, '+'))
            parts.push_back(looks_like_generator(item) ? parse_generator(item) : load_digraph_file(item));
        if (parts.empty())
            throw InvalidParameter("empty digraph argument");
        return parts.size() == 1 ? parts.front() : coproduct(parts);
    }

    FiniteLattice load_lattice(const std::string& path) { return FiniteLattice(load_poset_file(path)); }

    std::unique_ptr<OrderBackend> make_backend(const RunConfig& cfg)
    {
        const bool want_lattice = cfg.backend == "lattice" || !cfg.lattice_file.empty();
        const bool want_digraph = cfg.backend == "digraph" || cfg.digraph;
        if (want_lattice && want_digraph)
            throw InvalidParameter("select exactly one backend: --lattice FILE or --digraph");
        if (want_lattice) {
            if (cfg.lattice_file.empty())
                throw InvalidParameter("the lattice backend needs --lattice FILE");
            return std::make_unique<LatticeBackend>(load_lattice(cfg.lattice_file));
        }
        if (want_digraph) {
            if (cfg.bound == 0)
                throw InvalidParameter("--bound must be positive");
            return std::make_unique<DigraphBackend>(DigraphBackendOptions{cfg.bound, cfg.cap_enumeration});
        }
        throw InvalidParameter("no backend selected: use --lattice FILE or --digraph");
    }

    // Lattice values are labels (comma-separated lists allowed); digraph values
    // are comma-separated digraph arguments.
    ElemSet parse_elements(const OrderBackend& bk, const std::vector<std::string>& values)
    {
        std::vector<Elem> out;
        if (const auto* lb = dynamic_cast<const LatticeBackend*>(&bk)) {
            const auto& labels = lb->lattice().poset().labels();
            for (const auto& v : values) {
                if (std::find(labels.begin(), labels.end(), v) != labels.end()) {
                    out.push_back(lb->element(v));
                    continue;
                }
                for (const auto& item : split(v, ','))
                    out.push_back(lb->element(item));
            }
        } else {
            const auto& db = dynamic_cast<const DigraphBackend&>(bk);
            for (const auto& v : values)
                for (const auto& item : split(v, ','))
                    out.push_back(db.intern(resolve_digraph(item)));
        }
        return make_set(std::move(out));
    }

    Elem parse_single(const OrderBackend& bk, const std::vector<std::string>& values, const char* what)
    {
        auto s = parse_elements(bk, values);
        if (s.size() != 1)
            throw InvalidParameter(std::string(what) + " must name exactly one element");
        return s.front();
    }

    int not_found_code(const OrderBackend& bk) { return bk.exhaustive() ? exit_negative : exit_inconclusive; }

    int verdict_code(const Verdict& v)
    {
        switch (v.kind) {
        case VerdictKind::Verified:
            return exit_ok;
        case VerdictKind::Refuted:
            return exit_negative;
        case VerdictKind::Malformed:
            return exit_input_error;
        case VerdictKind::Unchecked:
            break;
        }
        return exit_inconclusive;
    }

    void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

    std::string mark(bool ok) { return ok ? "✓" : "✗"; }

    // ---- lattice ------------------------------------------------------------------

    int lattice_report(const RunConfig& cfg, const std::string& path, std::ostream& out)
    {
        auto poset = load_poset_file(path);
        auto lc = is_lattice(poset);
        Json j;
        j["elements"] = poset.size();
        j["lattice"] = lc.ok;
        if (!lc.ok) {
            j["lattice_witness"] = Json::array({poset.label(lc.witness->first), poset.label(lc.witness->second)});
            if (cfg.json())
                print_json(out, j);
            else
                out << "lattice " << mark(false) << " (witness " << poset.label(lc.witness->first) << ", "
                    << poset.label(lc.witness->second) << ": " << lc.reason << ")\n";
            return exit_ok;
        }
        FiniteLattice l(poset);
        auto dist = is_distributive(l);
        auto hey = is_heyting(l);
        auto dec = has_connected_decompositions(l);
        auto cn = connected_elements(l);

        std::ostringstream text;
        text << "lattice " << mark(true);
        text << " distributive " << mark(dist.ok);
        if (!dist.ok) {
            auto [a, b, c] = *dist.witness;
            text << " (witness " << l.label(a) << "," << l.label(b) << "," << l.label(c) << ")";
        }
        text << " heyting " << mark(hey.ok);
        if (!hey.ok)
            text << " (witness " << l.label(hey.witness->first) << "," << l.label(hey.witness->second) << ")";
        text << " decompositions " << mark(dec.ok);
        if (!dec.ok)
            text << " (witness " << l.label(*dec.witness) << ")";
        text << " Cn = {";
        for (std::size_t i = 0; i < cn.members.size(); ++i)
            text << (i ? "," : "") << l.label(cn.members[i]);
        text << "}";

        if (!cfg.json()) {
            out << text.str() << '\n';
            return exit_ok;
        }
        auto labels = [&](const auto& xs) {
            auto arr = Json::array();
            for (auto x : xs)
                arr.push_back(l.label(x));
            return arr;
        };
        j["distributive"] = dist.ok;
        if (!dist.ok) {
            auto [a, b, c] = *dist.witness;
            j["distributive_witness"] = labels(std::vector<Element>{a, b, c});
        }
        j["heyting"] = hey.ok;
        if (!hey.ok)
            j["heyting_witness"] = labels(std::vector<Element>{hey.witness->first, hey.witness->second});
        j["decompositions"] = dec.ok;
        if (!dec.ok)
            j["decompositions_witness"] = l.label(*dec.witness);
        j["connected"] = labels(cn.members);
        print_json(out, j);
        return exit_ok;
    }

    // ---- dual ---------------------------------------------------------------------

    struct DualArgs {
        std::vector<std::string> left, right, set, test, avoid;
        std::string x;
    };

    int report_missing_dual(const OrderBackend& bk, const MissingRightDual& e, const RunConfig& cfg,
                            std::ostream& out, std::ostream& err)
    {
        err << "MissingRightDual: component " << bk.describe(e.component) << ": " << e.what() << '\n';
        if (cfg.json()) {
            Json j;
            j["missing_right_dual"] = bk.to_json(e.component);
            j["bound"] = bk.bound();
            print_json(out, j);
        }
        return not_found_code(bk);
    }

    int dual_check(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out)
    {
        DualitySpec d;
        d.left = parse_elements(bk, a.left);
        d.right = parse_elements(bk, a.right);
        d.status = is_finite_duality(bk, d.left, d.right);
        if (cfg.json())
            print_json(out, duality_json(bk, d));
        else
            out << verdict_text(bk, d.status) << '\n';
        return verdict_code(d.status);
    }

    int dual_build(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err)
    {
        try {
            auto d = build_duality(bk, parse_elements(bk, a.left), {}, cfg.engine());
            if (cfg.json())
                print_json(out, duality_json(bk, d));
            else
                out << "B = " << set_text(bk, d.right) << "  " << verdict_text(bk, d.status) << '\n';
            return verdict_code(d.status);
        } catch (const MissingRightDual& e) {
            return report_missing_dual(bk, e, cfg, out, err);
        }
    }

    DualitySpec given_or_built(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg)
    {
        if (a.right.empty())
            return build_duality(bk, parse_elements(bk, a.left), {}, cfg.engine());
        DualitySpec d;
        d.left = parse_elements(bk, a.left);
        d.right = parse_elements(bk, a.right);
        d.status = is_finite_duality(bk, d.left, d.right);
        return d;
    }

    int dual_transversals(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out,
                          std::ostream& err)
    {
        try {
            auto d = given_or_built(bk, a, cfg);
            auto ts = transversals(bk, d.left);
            bool all_mapped = true;
            for (auto& t : ts) {
                try {
                    t.r = r_of_transversal(bk, d, t.members);
                } catch (const Inconsistent&) {
                    all_mapped = false;
                }
            }
            if (cfg.json()) {
                print_json(out, transversals_json(bk, ts));
            } else {
                for (const auto& t : ts)
                    out << "M = " << set_text(bk, t.members) << "  complement = " << set_text(bk, t.complement)
                        << "  r = " << (t.r ? bk.describe(*t.r) : std::string("none")) << '\n';
            }
            return all_mapped ? exit_ok : exit_negative;
        } catch (const MissingRightDual& e) {
            return report_missing_dual(bk, e, cfg, out, err);
        }
    }

    int dual_gaps(const OrderBackend& bk, const RunConfig& cfg, std::ostream& out)
    {
        auto gs = gaps(bk);
        bool all = true;
        auto arr = Json::array();
        for (auto [a, b] : gs) {
            Json j;
            j["gap"] = Json::array({bk.to_json(a), bk.to_json(b)});
            std::string via;
            try {
                auto [l, r] = gap_witness(bk, a, b);
                j["witness"] = Json::array({bk.to_json(l), bk.to_json(r)});
                via = "(" + bk.describe(l) + ", " + bk.describe(r) + ")";
            } catch (const NoWitness&) {
                j["witness"] = nullptr;
                via = "no witness";
                all = false;
            }
            arr.push_back(std::move(j));
            if (!cfg.json())
                out << bk.describe(a) << " < " << bk.describe(b) << "  via " << via << '\n';
        }
        if (cfg.json())
            print_json(out, arr);
        return all ? exit_ok : exit_negative;
    }

    int dual_antichain(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out,
                       std::ostream& err)
    {
        if (!a.set.empty()) {
            auto c = parse_elements(bk, a.set);
            Json j;
            j["antichain"] = set_json(bk, c);
            j["is_antichain"] = is_antichain(bk, c);
            j["is_maximal"] = is_maximal_antichain(bk, c);
            auto split = antichain_split(bk, c);
            if (split)
                j["split"] = Json{{"A", set_json(bk, split->above)}, {"B", set_json(bk, split->below)}};
            else
                j["split"] = nullptr;
            auto from = duality_from_antichain(bk, c, cfg.engine());
            if (from.applicable) {
                j["duality"] = duality_json(bk, *from.duality);
                j["reconstructed"] = set_json(bk, from.reconstructed);
                j["reconstruction_matches"] = from.matches;
            } else {
                j["duality"] = Json{{"not_applicable", from.reason}};
            }
            if (cfg.json()) {
                print_json(out, j);
            } else {
                out << "C = " << set_text(bk, c) << "  maximal " << mark(j["is_maximal"].get<bool>()) << '\n';
                if (split)
                    out << "split A = " << set_text(bk, split->above) << "  B = " << set_text(bk, split->below) << '\n';
                else
                    out << "NoSplit\n";
                if (from.applicable)
                    out << "duality (" << set_text(bk, from.duality->left) << ", " << set_text(bk, from.duality->right)
                        << ")  reconstruction " << mark(from.matches) << '\n';
                else
                    out << "duality NotApplicable: " << from.reason << '\n';
            }
            return split ? exit_ok : exit_negative;
        }
        try {
            auto d = given_or_built(bk, a, cfg);
            auto rep = antichain_from_duality(bk, d);
            if (cfg.json()) {
                Json j;
                j["antichain"] = set_json(bk, rep.antichain);
                j["is_antichain"] = rep.is_antichain;
                j["is_maximal"] = rep.is_maximal;
                j["incomparable_witness"] = rep.incomparable_witness ? bk.to_json(*rep.incomparable_witness) : Json();
                print_json(out, j);
            } else {
                out << "C = " << set_text(bk, rep.antichain) << "  antichain " << mark(rep.is_antichain)
                    << "  maximal " << mark(rep.is_maximal) << '\n';
            }
            return rep.is_maximal ? exit_ok : exit_negative;
        } catch (const MissingRightDual& e) {
            return report_missing_dual(bk, e, cfg, out, err);
        }
    }

    int dual_right_dual(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out)
    {
        auto l = parse_single(bk, a.left, "--left");
        auto r = right_dual_of(bk, l);
        if (cfg.json()) {
            Json j;
            j["left"] = bk.to_json(l);
            j["right_dual"] = r ? bk.to_json(*r) : Json();
            j["bound"] = bk.bound();
            j["exhaustive"] = bk.exhaustive();
            print_json(out, j);
        } else {
            out << (r ? "right dual " + bk.describe(*r) : std::string("NotFound at bound ") + std::to_string(bk.bound()))
                << '\n';
        }
        return r ? exit_ok : not_found_code(bk);
    }

    int dual_wld(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out)
    {
        auto x = parse_single(bk, a.left, "--left");
        auto w = wld_membership(bk, x, cfg.engine());
        const char* verdict = w.verdict == Tristate::True ? "true" : w.verdict == Tristate::False ? "false" : "unknown";
        if (cfg.json()) {
            Json j;
            j["element"] = bk.to_json(x);
            j["wld"] = w.verdict == Tristate::Unknown ? Json("unknown") : Json(w.verdict == Tristate::True);
            j["basis"] = w.basis;
            auto comps = Json::array();
            for (const auto& c : w.components)
                comps.push_back(Json{{"component", bk.to_json(c.component)},
                                     {"right_dual", c.dual ? bk.to_json(*c.dual) : Json()}});
            j["components"] = std::move(comps);
            j["bound"] = bk.bound();
            print_json(out, j);
        } else {
            out << "wld " << verdict << " (" << w.basis << ")\n";
            for (const auto& c : w.components)
                out << "  component " << bk.describe(c.component) << "  right dual "
                    << (c.dual ? bk.describe(*c.dual) : std::string("not found")) << '\n';
        }
        switch (w.verdict) {
        case Tristate::True:
            return exit_ok;
        case Tristate::False:
            return exit_negative;
        case Tristate::Unknown:
            break;
        }
        return exit_inconclusive;
    }

    int dual_sia(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out)
    {
        auto x = parse_single(bk, {a.x}, "--x");
        auto m = parse_elements(bk, a.test);
        auto u = parse_elements(bk, a.avoid);
        auto r = sia_check(bk, x, m, u, cfg.engine());
        const char* kind = r.kind == SiaKind::Witness ? "Witness"
            : r.kind == SiaKind::NoWitness           ? "NoWitness"
                                                     : "PreconditionFails";
        if (cfg.json()) {
            Json j;
            j["result"] = kind;
            j["witness"] = r.witness ? bk.to_json(*r.witness) : Json();
            j["bound"] = r.bound;
            j["conclusive"] = r.conclusive;
            print_json(out, j);
        } else {
            out << kind;
            if (r.witness)
                out << " " << bk.describe(*r.witness);
            if (r.kind == SiaKind::NoWitness)
                out << " at bound " << r.bound << (r.conclusive ? "" : " (inconclusive)");
            out << '\n';
        }
        switch (r.kind) {
        case SiaKind::Witness:
            return exit_ok;
        case SiaKind::PreconditionFails:
            return exit_negative;
        case SiaKind::NoWitness:
            break;
        }
        return r.conclusive ? exit_negative : exit_inconclusive;
    }

    int dual_decompose(const OrderBackend& bk, const DualArgs& a, const RunConfig& cfg, std::ostream& out,
                       std::ostream& err)
    {
        DualitySpec d;
        d.left = parse_elements(bk, a.left);
        d.right = parse_elements(bk, a.right);
        try {
            auto pairs = decompose_right(bk, d);
            if (cfg.json()) {
                print_json(out, pairs_json(bk, pairs));
            } else {
                for (auto [l, r] : pairs)
                    out << "(" << bk.describe(l) << ", " << bk.describe(r) << ")\n";
            }
            return exit_ok;
        } catch (const MeetMismatch& e) {
            err << "MeetMismatch: expected " << bk.describe(e.expected) << ", got " << bk.describe(e.actual) << '\n';
            return exit_negative;
        } catch (const MissingRightDual& e) {
            return report_missing_dual(bk, e, cfg, out, err);
        }
    }

    // ---- digraph ---------------------------------------------------------------------

    void print_digraph(const RunConfig& cfg, const Digraph& g, std::ostream& out)
    {
        if (cfg.dot())
            out << digraph_dot(g);
        else
            out << digraph_to_json(g) << '\n';
    }

    Digraph presentable(const Digraph& g)
    {
        return g.vertex_count() <= canonical_vertex_cap ? canonical_form(g) : g;
    }

    int digraph_hom(const RunConfig& cfg, const std::string& gs, const std::string& hs, std::ostream& out)
    {
        auto f = find_hom(resolve_digraph(gs), resolve_digraph(hs));
        if (cfg.json()) {
            Json j;
            j["exists"] = f.has_value();
            j["map"] = f ? Json(f->map) : Json();
            print_json(out, j);
        } else if (f) {
            for (std::size_t v = 0; v < f->map.size(); ++v)
                out << (v ? " " : "") << v << "->" << f->map[v];
            out << '\n';
        } else {
            out << "no homomorphism\n";
        }
        return f ? exit_ok : exit_negative;
    }

    int digraph_enumerate(const RunConfig& cfg, std::size_t max, bool count_only, std::ostream& out)
    {
        EnumerationOptions opts{cfg.cap_enumeration};
        if (count_only) {
            auto counts = class_counts(max, opts);
            if (cfg.json()) {
                Json j;
                j["max"] = max;
                j["counts"] = counts;
                print_json(out, j);
                return exit_ok;
            }
            std::size_t below = 0;
            for (std::size_t n = 0; n < max; ++n)
                below += counts[n];
            if (max > 0)
                out << "n≤" << max - 1 << ": " << below << ", ";
            out << "n=" << max << ": " << counts[max] << '\n';
            return exit_ok;
        }
        auto all = enumerate_digraphs(max, opts);
        if (cfg.json()) {
            auto arr = Json::array();
            for (const auto& g : all)
                arr.push_back(Json::parse(digraph_to_json(g)));
            print_json(out, arr);
        } else {
            for (const auto& g : all)
                out << digraph_to_json(g) << '\n';
        }
        return exit_ok;
    }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite homomorphism dualities over explicit lattices and the digraph homomorphism order",
                 "duality_lab"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--backend", cfg.backend, "lattice or digraph")->check(CLI::IsMember({"lattice", "digraph"}));
    app.add_option("--lattice", cfg.lattice_file, "lattice JSON file (selects the lattice backend)");
    app.add_flag("--digraph", cfg.digraph, "select the digraph backend");
    app.add_option("--bound", cfg.bound, "digraph universe: cores with at most this many vertices");
    app.add_option("--output", cfg.output, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_flag("--allow-degenerate", cfg.allow_degenerate, "admit ({bottom}, {}) as a duality");
    app.add_option("--cap-exponential", cfg.cap_exponential, "vertex cap for exponential digraphs");
    app.add_option("--cap-enumeration", cfg.cap_enumeration, "vertex cap for digraph enumeration");

    // lattice
    auto* lat = app.add_subcommand("lattice", "inspect finite posets and lattices");
    lat->require_subcommand(1);
    std::string lattice_path;
    auto* lat_report = lat->add_subcommand("report", "lattice, distributivity, Heyting and decomposition checks");
    lat_report->add_option("file", lattice_path, "poset JSON file");
    auto* lat_dot = lat->add_subcommand("dot", "Hasse diagram in DOT");
    lat_dot->add_option("file", lattice_path, "poset JSON file");
    auto* lat_downsets = lat->add_subcommand("downsets", "down-set lattice of a poset, as JSON");
    lat_downsets->add_option("file", lattice_path, "poset JSON file")->required();

    // dual
    auto* dual = app.add_subcommand("dual", "duality computations on the selected backend");
    dual->require_subcommand(1);
    DualArgs da;
    auto add_sides = [&](CLI::App* sc, bool right) {
        sc->add_option("--left", da.left, "left elements")->required();
        if (right)
            sc->add_option("--right", da.right, "right elements");
    };
    auto* d_check = dual->add_subcommand("check", "verify a finite duality (A, B)");
    add_sides(d_check, true);
    auto* d_build = dual->add_subcommand("build", "construct B for an antichain A");
    add_sides(d_build, false);
    auto* d_trans = dual->add_subcommand("transversals", "transversals of A with their right elements");
    add_sides(d_trans, true);
    auto* d_gaps = dual->add_subcommand("gaps", "covering pairs with duality-pair witnesses");
    auto* d_anti = dual->add_subcommand("antichain", "antichain of a duality, or splitting of an antichain");
    d_anti->add_option("--left", da.left, "left elements of a duality");
    d_anti->add_option("--right", da.right, "right elements of a duality");
    d_anti->add_option("--set", da.set, "a maximal antichain to split");
    auto* d_rd = dual->add_subcommand("right-dual", "search the universe for a right dual");
    add_sides(d_rd, false);
    auto* d_wld = dual->add_subcommand("wld", "weak-left-dual membership");
    add_sides(d_wld, false);
    auto* d_sia = dual->add_subcommand("sia", "bounded sparse-incomparability check");
    d_sia->add_option("--x", da.x, "the element x")->required();
    d_sia->add_option("--test", da.test, "the finite test set M");
    d_sia->add_option("--avoid", da.avoid, "the finite set U");
    auto* d_dec = dual->add_subcommand("decompose", "split (A, {r}) into duality pairs");
    add_sides(d_dec, true);

    // digraph
    auto* dg = app.add_subcommand("digraph", "digraph operations");
    dg->require_subcommand(1);
    std::vector<std::string> graphs;
    std::size_t enum_max = 0;
    bool count_only = false;
    auto graph_args = [&](CLI::App* sc, std::size_t n, const char* help) {
        sc->add_option("graphs", graphs, help)->required()->expected(static_cast<int>(n));
    };
    auto* g_core = dg->add_subcommand("core", "core of a digraph");
    graph_args(g_core, 1, "digraph");
    auto* g_hom = dg->add_subcommand("hom", "find a homomorphism G -> H");
    graph_args(g_hom, 2, "G H");
    auto* g_enum = dg->add_subcommand("enumerate", "digraphs up to isomorphism");
    g_enum->add_option("--max", enum_max, "largest vertex count")->required();
    g_enum->add_flag("--count-only", count_only, "print class counts only");
    auto* g_prod = dg->add_subcommand("product", "categorical product G x H");
    graph_args(g_prod, 2, "G H");
    auto* g_exp = dg->add_subcommand("exp", "exponential digraph C^B");
    graph_args(g_exp, 2, "C B");
    auto* g_comp = dg->add_subcommand("components", "weak components");
    graph_args(g_comp, 1, "digraph");
    auto* g_forest = dg->add_subcommand("forest", "is the digraph an orientation of a forest");
    graph_args(g_forest, 1, "digraph");
    auto* g_iso = dg->add_subcommand("iso", "isomorphism test");
    graph_args(g_iso, 2, "G H");
    auto* g_dot = dg->add_subcommand("dot", "DOT rendering");
    graph_args(g_dot, 1, "digraph");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*lat) {
            const auto& path = lattice_path.empty() ? cfg.lattice_file : lattice_path;
            if (path.empty())
                throw InvalidParameter("no lattice file given");
            if (*lat_report)
                return lattice_report(cfg, path, out);
            if (*lat_dot) {
                out << hasse_dot(load_poset_file(path));
                return exit_ok;
            }
            auto l = downset_lattice(load_poset_file(path));
            out << (cfg.dot() ? hasse_dot(l.poset()) : poset_to_json(l.poset()) + "\n");
            return exit_ok;
        }

        if (*dual) {
            auto bk = make_backend(cfg);
            if (*d_check)
                return dual_check(*bk, da, cfg, out);
            if (*d_build)
                return dual_build(*bk, da, cfg, out, err);
            if (*d_trans)
                return dual_transversals(*bk, da, cfg, out, err);
            if (*d_gaps)
                return dual_gaps(*bk, cfg, out);
            if (*d_anti) {
                if (da.set.empty() && da.left.empty())
                    throw InvalidParameter("dual antichain needs --set or --left");
                return dual_antichain(*bk, da, cfg, out, err);
            }
            if (*d_rd)
                return dual_right_dual(*bk, da, cfg, out);
            if (*d_wld)
                return dual_wld(*bk, da, cfg, out);
            if (*d_sia)
                return dual_sia(*bk, da, cfg, out);
            return dual_decompose(*bk, da, cfg, out, err);
        }

        if (*g_enum)
            return digraph_enumerate(cfg, enum_max, count_only, out);
        if (*g_hom)
            return digraph_hom(cfg, graphs[0], graphs[1], out);
        if (*g_iso) {
            bool iso = is_isomorphic(resolve_digraph(graphs[0]), resolve_digraph(graphs[1]));
            out << (cfg.json() ? Json{{"isomorphic", iso}}.dump() : std::string(iso ? "isomorphic" : "not isomorphic"))
                << '\n';
            return iso ? exit_ok : exit_negative;
        }
        if (*g_forest) {
            bool f = is_forest_orientation(resolve_digraph(graphs[0]));
            out << (cfg.json() ? Json{{"forest", f}}.dump() : std::string(f ? "forest" : "not a forest")) << '\n';
            return f ? exit_ok : exit_negative;
        }
        if (*g_comp) {
            auto cs = weak_components(resolve_digraph(graphs[0]));
            if (cfg.json()) {
                Json arr = Json::array();
                for (const auto& c : cs)
                    arr.push_back(Json::parse(digraph_to_json(c)));
                out << arr.dump() << '\n';
                return exit_ok;
            }
            for (const auto& c : cs)
                print_digraph(cfg, c, out);
            return exit_ok;
        }
        if (*g_core) {
            print_digraph(cfg, presentable(core(resolve_digraph(graphs[0]))), out);
            return exit_ok;
        }
        if (*g_prod) {
            print_digraph(cfg, product(resolve_digraph(graphs[0]), resolve_digraph(graphs[1])), out);
            return exit_ok;
        }
        if (*g_exp) {
            print_digraph(cfg,
                          exponential(resolve_digraph(graphs[0]), resolve_digraph(graphs[1]),
                                      ExponentialOptions{cfg.cap_exponential}),
                          out);
            return exit_ok;
        }
        out << digraph_dot(resolve_digraph(graphs[0]));
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return exit_input_error;
    }
}

} // namespace duality

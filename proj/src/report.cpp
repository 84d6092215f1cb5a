#include "duality/report.hpp"

namespace duality {

Json set_json(const OrderBackend& bk, const ElemSet& s)
{
    auto out = Json::array();
    for (auto x : s)
        out.push_back(bk.to_json(x));
    return out;
}

Json verdict_json(const OrderBackend& bk, const Verdict& v)
{
    Json out = Json::object();
    switch (v.kind) {
    case VerdictKind::Verified:
        out["verified_bound"] = v.bound;
        out["exhaustive"] = v.exhaustive;
        break;
    case VerdictKind::Refuted:
        out["refuted_witness"] = bk.to_json(*v.witness);
        out["bound"] = v.bound;
        break;
    case VerdictKind::Malformed:
        out["malformed"] = Json::array({bk.to_json(v.comparable->first), bk.to_json(v.comparable->second)});
        break;
    case VerdictKind::Unchecked:
        out["unchecked"] = true;
        break;
    }
    return out;
}

Json duality_json(const OrderBackend& bk, const DualitySpec& d)
{
    Json out;
    out["left"] = set_json(bk, d.left);
    out["right"] = set_json(bk, d.right);
    out["status"] = verdict_json(bk, d.status);
    if (d.degenerate())
        out["degenerate"] = true;
    return out;
}

Json transversals_json(const OrderBackend& bk, const std::vector<Transversal>& ts)
{
    auto out = Json::array();
    for (const auto& t : ts) {
        Json j;
        j["members"] = set_json(bk, t.members);
        j["complement"] = set_json(bk, t.complement);
        j["r"] = t.r ? bk.to_json(*t.r) : Json();
        out.push_back(std::move(j));
    }
    return out;
}

Json pairs_json(const OrderBackend& bk, const std::vector<std::pair<Elem, Elem>>& ps)
{
    auto out = Json::array();
    for (auto [a, b] : ps)
        out.push_back(Json::array({bk.to_json(a), bk.to_json(b)}));
    return out;
}

std::string verdict_text(const OrderBackend& bk, const Verdict& v)
{
    switch (v.kind) {
    case VerdictKind::Verified:
        return v.exhaustive ? "Verified(exhaustive)" : "Verified(" + std::to_string(v.bound) + ")";
    case VerdictKind::Refuted:
        if (bk.exhaustive())
            return "Refuted, witness " + bk.describe(*v.witness);
        return "Refuted at bound " + std::to_string(v.bound) + ", witness " + bk.describe(*v.witness);
    case VerdictKind::Malformed:
        return "Malformed: " + bk.describe(v.comparable->first) + " and " + bk.describe(v.comparable->second)
            + " are comparable";
    case VerdictKind::Unchecked:
        break;
    }
    return "Unchecked";
}

std::string set_text(const OrderBackend& bk, const ElemSet& s)
{
    std::vector<std::string> parts;
    bool nested = false;
    for (auto x : s) {
        parts.push_back(bk.describe(x));
        nested |= parts.back().find(',') != std::string::npos;
    }
    // Digraph descriptions contain commas themselves.
    const std::string sep = nested ? "; " : ",";
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out + "}";
}

} // namespace duality

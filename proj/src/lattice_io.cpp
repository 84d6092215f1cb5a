#include "duality/lattice.hpp"

#include <fstream>
#include <sstream>

#include "duality/json_util.hpp"

namespace duality {

FinitePoset parse_poset_json(const std::string& text)
{
    auto doc = parse_json_document(text);
    if (!doc.is_object() || !doc.contains("elements"))
        throw ParseError("poset JSON must be an object with an \"elements\" array");
    const auto& elems = doc.at("elements");
    if (!elems.is_array())
        throw ParseError("\"elements\" must be an array of strings");

    std::vector<std::string> labels;
    for (const auto& e : elems) {
        if (!e.is_string())
            throw ParseError("element labels must be strings, got " + e.dump());
        labels.push_back(e.get<std::string>());
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("leq")) {
        const auto& leq = doc.at("leq");
        if (!leq.is_array())
            throw ParseError("\"leq\" must be an array of [a, b] pairs");
        for (const auto& pr : leq) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
                throw ParseError("malformed leq pair " + pr.dump());
            pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
        }
    }
    return validate_poset(std::move(labels), pairs);
}

FinitePoset load_poset_file(const std::string& path) { return parse_poset_json(read_text_file(path)); }

std::string poset_to_json(const FinitePoset& p)
{
    nlohmann::ordered_json doc;
    doc["elements"] = p.labels();
    auto leq = nlohmann::ordered_json::array();
    for (auto [a, b] : p.covering_pairs())
        leq.push_back({p.label(a), p.label(b)});
    doc["leq"] = std::move(leq);
    return doc.dump();
}

std::string hasse_dot(const FinitePoset& p)
{
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (Element a = 0; a < p.size(); ++a)
        out << "  n" << a << " [label=" << nlohmann::json(p.label(a)).dump() << "];\n";
    for (auto [a, b] : p.covering_pairs())
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace duality

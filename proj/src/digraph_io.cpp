#include <sstream>

#include "duality/digraph.hpp"
#include "duality/json_util.hpp"

namespace duality {

namespace {

    Digraph parse_adjacency_matrix(const std::string& text)
    {
        std::vector<std::vector<char>> rows;
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::vector<char> row;
            for (char ch : line) {
                if (ch == '0' || ch == '1')
                    row.push_back(ch == '1');
                else if (ch != ' ' && ch != '\t' && ch != '\r' && ch != ',')
                    throw ParseError("line " + std::to_string(line_no) + ": unexpected character '"
                                     + std::string(1, ch) + "' in adjacency matrix");
            }
            if (!row.empty())
                rows.push_back(std::move(row));
        }
        const auto n = rows.size();
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n)
                throw ParseError("adjacency matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size())
                                 + " entries, expected " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i][j])
                    arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
        return Digraph(n, std::move(arcs));
    }

} // namespace

Digraph parse_digraph(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{')
        return parse_adjacency_matrix(text);

    auto doc = parse_json_document(text);
    if (!doc.contains("n") || !doc.at("n").is_number_unsigned())
        throw ParseError("digraph JSON needs a non-negative integer \"n\"");
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Arc> arcs;
    if (doc.contains("arcs")) {
        const auto& list = doc.at("arcs");
        if (!list.is_array())
            throw ParseError("\"arcs\" must be an array of [u, v] pairs");
        for (const auto& a : list) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned())
                throw ParseError("malformed arc " + a.dump());
            auto u = a[0].get<std::size_t>(), v = a[1].get<std::size_t>();
            if (u >= n || v >= n)
                throw ParseError("arc " + a.dump() + " out of range for n = " + std::to_string(n));
            arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph load_digraph_file(const std::string& path) { return parse_digraph(read_text_file(path)); }

std::string digraph_to_json(const Digraph& g)
{
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto arcs = nlohmann::ordered_json::array();
    for (auto [u, v] : g.arcs())
        arcs.push_back({u, v});
    doc["arcs"] = std::move(arcs);
    return doc.dump();
}

std::string digraph_dot(const Digraph& g, const std::string& name)
{
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.arcs())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace duality

#include <fstream>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/graph.hpp"

namespace holant {

Multigraph read_edge_list(std::istream &in)
{
    long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        throw ParseError("edge list: expected header 'n m'");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long i = 0; i < m; i++) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("edge list: endpoint out of range on edge " + std::to_string(i));
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string rest;
    if (in >> rest) {
        throw ParseError("edge list: trailing content '" + rest + "'");
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph read_edge_list_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Multigraph &g)
{
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto &e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

Multigraph parse_inline_graph(const std::string &text)
{
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(head, &used);
        if (used != head.size()) {
            throw ParseError("");
        }
    } catch (const std::exception &) {
        throw ParseError("inline graph: expected 'n:u-v,...', got '" + text + "'");
    }
    std::vector<Edge> edges;
    if (colon != std::string::npos && colon + 1 < text.size()) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos) {
                throw ParseError("inline graph: bad edge '" + item + "'");
            }
            try {
                int u = std::stoi(item.substr(0, dash));
                int v = std::stoi(item.substr(dash + 1));
                if (u < 0 || u >= n || v < 0 || v >= n) {
                    throw ParseError("inline graph: endpoint out of range in '" + item + "'");
                }
                edges.push_back({u, v});
            } catch (const ParseError &) {
                throw;
            } catch (const std::exception &) {
                throw ParseError("inline graph: bad edge '" + item + "'");
            }
        }
    }
    return Multigraph(n, std::move(edges));
}

}  // namespace holant

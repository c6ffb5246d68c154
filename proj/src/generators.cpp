#include <algorithm>
#include <set>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/graph.hpp"
#include "holant/rng.hpp"

namespace holant {

namespace {

Multigraph random_regular(int n, int d, std::uint64_t seed)
{
    if (n <= 0 || d < 0 || d >= n || (static_cast<long>(n) * d) % 2 != 0) {
        throw PreconditionError("random-regular: infeasible n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
    }
    Rng rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < 100000; attempt++) {
        for (std::size_t i = 0; i < points.size(); i++) {
            points[i] = static_cast<int>(i / d);
        }
        for (std::size_t i = points.size(); i > 1; i--) {
            std::swap(points[i - 1], points[rng.below(i)]);
        }
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            int a = std::min(points[i], points[i + 1]);
            int b = std::max(points[i], points[i + 1]);
            ok = a != b && seen.emplace(a, b).second;
            edges.push_back({a, b});
        }
        if (ok) {
            std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) {
                return std::pair(x.u, x.v) < std::pair(y.u, y.v);
            });
            return Multigraph(n, std::move(edges));
        }
    }
    throw PreconditionError("random-regular: pairing model failed to produce a simple graph");
}

}  // namespace

int GraphFamilySpec::declared_max_degree() const
{
    switch (family) {
    case Family::Cycle:
        return 2;
    case Family::Path:
        return size <= 1 ? 0 : (size == 2 ? 1 : 2);
    case Family::Torus2d:
        return 4;
    case Family::RandomRegular:
        return degree;
    case Family::Complete:
        return std::max(0, size - 1);
    }
    return 0;
}

std::string GraphFamilySpec::to_string() const
{
    std::ostringstream out;
    switch (family) {
    case Family::Cycle:
        out << "cycle:" << size;
        break;
    case Family::Path:
        out << "path:" << size;
        break;
    case Family::Torus2d:
        out << "torus2d:" << size << "x" << size2;
        break;
    case Family::RandomRegular:
        out << "random-regular:" << size << ":" << degree << ":" << seed;
        break;
    case Family::Complete:
        out << "complete:" << size;
        break;
    }
    return out.str();
}

Multigraph make_cycle(int n)
{
    if (n < 1) {
        throw PreconditionError("cycle: need at least one vertex");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; i++) {
        edges.push_back({i, (i + 1) % n});
    }
    return Multigraph(n, std::move(edges));
}

Multigraph generate(const GraphFamilySpec &spec)
{
    const int n = spec.size;
    switch (spec.family) {
    case Family::Cycle:
        if (n < 3) {
            throw PreconditionError("cycle: simple cycles need n >= 3");
        }
        return make_cycle(n);
    case Family::Path: {
        if (n < 1) {
            throw PreconditionError("path: need n >= 1");
        }
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; i++) {
            edges.push_back({i, i + 1});
        }
        return Multigraph(n, std::move(edges));
    }
    case Family::Torus2d: {
        const int rows = spec.size, cols = spec.size2;
        if (rows < 3 || cols < 3) {
            throw PreconditionError("torus2d: both sides must be >= 3 for a simple graph");
        }
        std::vector<Edge> edges;
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                int v = r * cols + c;
                edges.push_back({v, r * cols + (c + 1) % cols});
                edges.push_back({v, ((r + 1) % rows) * cols + c});
            }
        }
        return Multigraph(rows * cols, std::move(edges));
    }
    case Family::RandomRegular:
        return random_regular(n, spec.degree, spec.seed);
    case Family::Complete: {
        if (n < 1) {
            throw PreconditionError("complete: need n >= 1");
        }
        std::vector<Edge> edges;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                edges.push_back({i, j});
            }
        }
        return Multigraph(n, std::move(edges));
    }
    }
    throw PreconditionError("unknown family");
}

namespace {

int parse_int(const std::string &s, const std::string &context)
{
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) {
            throw ParseError("");
        }
        return static_cast<int>(v);
    } catch (const std::exception &) {
        throw ParseError("family: bad integer '" + s + "' in " + context);
    }
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

GraphFamilySpec parse_family(const std::string &text)
{
    auto parts = split(text, ':');
    const auto &tag = parts[0];
    GraphFamilySpec spec;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi) {
            throw ParseError("family: wrong number of fields in '" + text + "'");
        }
    };
    if (tag == "cycle" || tag == "path" || tag == "complete") {
        need(2, 2);
        spec.family = tag == "cycle" ? Family::Cycle
                      : tag == "path" ? Family::Path
                                      : Family::Complete;
        spec.size = parse_int(parts[1], text);
    } else if (tag == "torus2d") {
        need(2, 2);
        auto dims = split(parts[1], 'x');
        if (dims.size() != 2) {
            throw ParseError("family: torus2d expects RxC, got '" + parts[1] + "'");
        }
        spec.family = Family::Torus2d;
        spec.size = parse_int(dims[0], text);
        spec.size2 = parse_int(dims[1], text);
    } else if (tag == "random-regular") {
        need(3, 4);
        spec.family = Family::RandomRegular;
        spec.size = parse_int(parts[1], text);
        spec.degree = parse_int(parts[2], text);
        spec.seed = parts.size() == 4 ? static_cast<std::uint64_t>(parse_int(parts[3], text)) : 0;
    } else {
        throw ParseError("family: unknown family '" + tag + "'");
    }
    return spec;
}

}  // namespace holant

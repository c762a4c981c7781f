#include "homrel/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace homrel {

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

long long read_int(std::istream& in, const char* what) {
    long long v;
    if (!(in >> v)) throw InputError(std::string("expected integer: ") + what);
    return v;
}

int read_size(std::istream& in, const char* what, long long max = 1000000) {
    long long v = read_int(in, what);
    if (v < 0 || v > max) throw InputError(std::string("out of range: ") + what);
    return static_cast<int>(v);
}

} // namespace

HomogeneousRelation read_relation(std::istream& in) {
    int n = read_size(in, "ground set size", 100000);
    if (n < 1) throw InputError("relation needs at least one element");
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            labels[x][y] = static_cast<int>(read_int(in, "class label"));
    return HomogeneousRelation::from_rows(n, labels);
}

void write_relation(std::ostream& out, const HomogeneousRelation& h) {
    int n = h.size();
    out << n << "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) out << (y ? " " : "") << h.cls(x, y);
        out << "\n";
    }
}

Digraph read_digraph(std::istream& in, bool undirected) {
    int n = read_size(in, "vertex count", 100000);
    int m = read_size(in, "edge count", 100000000);
    Digraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = read_size(in, "endpoint", n - 1);
        int v = read_size(in, "endpoint", n - 1);
        if (u == v) throw InputError("self-loops are not allowed");
        if (undirected) g.add_edge(u, v);
        else g.add_arc(u, v);
    }
    return g;
}

void write_digraph(std::ostream& out, const Digraph& g, bool undirected) {
    auto arcs = g.arcs();
    if (undirected) {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : arcs)
            if (u < v) edges.push_back({u, v});
        out << g.size() << " " << edges.size() << "\n";
        for (auto [u, v] : edges) out << u << " " << v << "\n";
    } else {
        out << g.size() << " " << arcs.size() << "\n";
        for (auto [u, v] : arcs) out << u << " " << v << "\n";
    }
}

TwoStructure read_two_structure(std::istream& in) {
    int n = read_size(in, "ground set size", 100000);
    if (n < 1) throw InputError("2-structure needs at least one element");
    TwoStructure t(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int c = read_size(in, "color", 1000000000);
            if (u != v) t.set_color(u, v, c);
        }
    return t;
}

void write_two_structure(std::ostream& out, const TwoStructure& t) {
    int n = t.size();
    out << n << "\n";
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) out << (v ? " " : "") << (u == v ? 0 : t.color(u, v));
        out << "\n";
    }
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

std::string serialize_tree(const TreeDocument& doc) {
    std::ostringstream out;
    out << "homrel-tree v1\n";
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(doc.input_hash));
    out << "hash " << hex << "\n";
    out << "algo " << doc.algo << "\n";
    if (doc.elapsed_ms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *doc.elapsed_ms);
        out << "time-ms " << buf << "\n";
    }
    std::vector<std::pair<int, int>> stack{{doc.tree.root, 0}};
    while (!stack.empty()) {
        auto [ni, depth] = stack.back();
        stack.pop_back();
        const auto& node = doc.tree.nodes[ni];
        for (int i = 0; i < depth; ++i) out << "  ";
        if (node.children.empty())
            out << "leaf " << doc.names[node.elements.front()] << "\n";
        else
            out << kind_name(node.kind) << "\n";
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back({*it, depth + 1});
    }
    return out.str();
}

TreeDocument parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](bool required) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        if (required) throw InputError("tree document: unexpected end of input");
        return false;
    };
    TreeDocument doc;
    next_line(true);
    if (line != "homrel-tree v1") throw InputError("tree document: bad header");
    next_line(true);
    if (line.rfind("hash ", 0) != 0) throw InputError("tree document: missing hash");
    doc.input_hash = std::stoull(line.substr(5), nullptr, 16);
    next_line(true);
    if (line.rfind("algo ", 0) != 0) throw InputError("tree document: missing algo");
    doc.algo = line.substr(5);

    std::vector<std::pair<int, int>> stack; // (depth, node index)
    bool first = true;
    while (next_line(false)) {
        if (first && line.rfind("time-ms ", 0) == 0) {
            doc.elapsed_ms = std::stod(line.substr(8));
            continue;
        }
        size_t indent = 0;
        while (indent < line.size() && line[indent] == ' ') ++indent;
        if (indent % 2 != 0) throw InputError("tree document: odd indentation");
        int depth = static_cast<int>(indent / 2);
        std::string body = line.substr(indent);
        if (first && depth != 0) throw InputError("tree document: root must be unindented");
        first = false;

        TreeNode node;
        if (body.rfind("leaf ", 0) == 0) {
            node.kind = NodeKind::Leaf;
            int id = static_cast<int>(doc.names.size());
            doc.names.push_back(body.substr(5));
            node.elements = {id};
        } else if (body == "node") {
            node.kind = NodeKind::Node;
        } else if (body == "prime") {
            node.kind = NodeKind::Prime;
        } else if (body == "degenerate") {
            node.kind = NodeKind::Degenerate;
        } else if (body == "linear") {
            node.kind = NodeKind::Linear;
        } else {
            throw InputError("tree document: unknown node line: " + body);
        }
        while (!stack.empty() && stack.back().first >= depth) stack.pop_back();
        if (depth > 0) {
            if (stack.empty() || stack.back().first != depth - 1)
                throw InputError("tree document: broken indentation structure");
            node.parent = stack.back().second;
        } else if (!doc.tree.nodes.empty()) {
            throw InputError("tree document: multiple roots");
        }
        doc.tree.nodes.push_back(std::move(node));
        int id = static_cast<int>(doc.tree.nodes.size()) - 1;
        if (doc.tree.nodes[id].parent >= 0)
            doc.tree.nodes[doc.tree.nodes[id].parent].children.push_back(id);
        stack.push_back({depth, id});
    }
    if (doc.tree.nodes.empty()) throw InputError("tree document: empty tree");
    doc.tree.root = 0;
    // fill internal element sets bottom-up (nodes are in depth-first order)
    for (int i = static_cast<int>(doc.tree.nodes.size()) - 1; i >= 0; --i) {
        auto& node = doc.tree.nodes[i];
        if (node.children.empty()) {
            if (node.kind != NodeKind::Leaf)
                throw InputError("tree document: childless internal node");
            continue;
        }
        for (int c : node.children) {
            const auto& ce = doc.tree.nodes[c].elements;
            node.elements.insert(node.elements.end(), ce.begin(), ce.end());
        }
        std::sort(node.elements.begin(), node.elements.end());
    }
    return doc;
}

} // namespace homrel

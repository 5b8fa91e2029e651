#include "domcert/graph.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "domcert/util.hpp"

namespace domcert {

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw InputError("bad edge");
    edges.emplace_back(u, v);
}

std::vector<uint32_t> Graph::neighbor_masks() const {
    if (n > 32) throw InputError("graph too large for mask representation");
    std::vector<uint32_t> nb(n, 0);
    for (auto [u, v] : edges) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    return nb;
}

Graph Graph::path(int len) {
    Graph g;
    g.n = len;
    for (int i = 0; i + 1 < len; i++) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int len) {
    Graph g = path(len);
    if (len >= 3) g.add_edge(len - 1, 0);
    return g;
}

Graph Graph::read_edge_list(std::istream &in) {
    Graph g;
    int m;
    if (!(in >> g.n >> m)) throw InputError("edge list: missing 'n m' header");
    for (int i = 0; i < m; i++) {
        int u, v;
        if (!(in >> u >> v)) throw InputError("edge list: truncated");
        g.add_edge(u, v);
    }
    return g;
}

void Graph::write_edge_list(std::ostream &out) const {
    out << n << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

BuiltGraph build_graph(const ExtensionScript &script) {
    int k = script.k;
    BuiltGraph bg;
    Graph g;
    g.n = k;
    std::vector<int> sep(k);
    for (int i = 0; i < k; i++) sep[i] = i;
    for (const auto &d : script.steps) {
        int nv = g.n++;
        if (d.o < 0) {
            for (int i = 0; i < k; i++)
                if ((d.edges >> i) & 1) g.add_edge(nv, sep[i]);
        } else {
            int o = sep[d.o];
            sep[d.o] = nv;
            for (int i = 0; i < k; i++)
                if ((d.edges >> i) & 1) g.add_edge(o, sep[i]);
        }
    }
    bg.open = g;
    int bit = 0;
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++, bit++)
            if ((script.completion_mask >> bit) & 1) g.add_edge(sep[i], sep[j]);
    bg.completed = g;
    bg.separator = sep;
    return bg;
}

int TreeScript::leaves() const {
    if (kind == Leaf) return 1;
    return a->leaves() + b->leaves();
}

std::string TreeScript::str() const {
    if (kind == Leaf) return "(leaf)";
    return std::string("(") + (kind == Compose ? "compose " : "union ") + a->str() + " " +
           b->str() + ")";
}

namespace {

TreeScript parse_tree_rec(const std::string &s, size_t &i) {
    auto skip = [&] {
        while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
    };
    skip();
    if (i >= s.size() || s[i] != '(') throw InputError("tree script: expected '('");
    i++;
    skip();
    size_t j = i;
    while (j < s.size() && std::isalpha((unsigned char)s[j])) j++;
    std::string word = s.substr(i, j - i);
    i = j;
    TreeScript t;
    if (word == "leaf") {
        t.kind = TreeScript::Leaf;
    } else if (word == "compose" || word == "union") {
        t.kind = word == "compose" ? TreeScript::Compose : TreeScript::Union;
        t.a = std::make_unique<TreeScript>(parse_tree_rec(s, i));
        t.b = std::make_unique<TreeScript>(parse_tree_rec(s, i));
    } else {
        throw InputError("tree script: unknown operator '" + word + "'");
    }
    skip();
    if (i >= s.size() || s[i] != ')') throw InputError("tree script: expected ')'");
    i++;
    return t;
}

int build_tree_rec(const TreeScript &s, Graph &g) {
    if (s.kind == TreeScript::Leaf) return g.n++;
    int ra = build_tree_rec(*s.a, g);
    int rb = build_tree_rec(*s.b, g);
    if (s.kind == TreeScript::Compose) g.edges.emplace_back(ra, rb);
    return ra;
}

}  // namespace

TreeScript parse_tree_script(const std::string &text) {
    size_t i = 0;
    TreeScript t = parse_tree_rec(text, i);
    while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
    if (i != text.size()) throw InputError("tree script: trailing input");
    return t;
}

Graph build_tree_graph(const TreeScript &s, int &root) {
    Graph g;
    root = build_tree_rec(s, g);
    return g;
}

}  // namespace domcert

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "domcert/pw_system.hpp"

namespace domcert {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int u, int v);
    std::vector<uint32_t> neighbor_masks() const;  // requires n <= 32

    static Graph path(int len);
    static Graph cycle(int len);
    static Graph read_edge_list(std::istream &in);  // "n m" header then pairs
    void write_edge_list(std::ostream &out) const;
};

// Graph realized by an extension script, before and after completion edges.
struct BuiltGraph {
    Graph open;                  // without completion edges
    Graph completed;             // with completion edges
    std::vector<int> separator;  // final separator vertex ids, by position
};

BuiltGraph build_graph(const ExtensionScript &script);

// Tree/forest scripts: (leaf) | (compose A B) | (union A B).
struct TreeScript {
    enum Kind { Leaf, Compose, Union } kind = Leaf;
    std::unique_ptr<TreeScript> a, b;

    int leaves() const;
    std::string str() const;
};

TreeScript parse_tree_script(const std::string &text);

// Builds the underlying graph; the distinguished vertex is returned in root.
Graph build_tree_graph(const TreeScript &s, int &root);

}  // namespace domcert

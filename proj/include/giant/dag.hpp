#pragma once
// Folding a Tree into a DAG in which structurally identical subtrees are
// stored once.

#include <cstddef>
#include <string>
#include <vector>

#include "giant/tree.hpp"

namespace giant {

struct Dag {
    struct Node {
        Tag tag = Tag::leaf;
        // Head first, then the tail counters in order.
        std::vector<std::size_t> children;

        friend bool operator==(const Node&, const Node&) = default;
    };

    // Ids are indices into `nodes`, assigned in first-visit (preorder) order
    // from the root, so the root is always 0.
    std::vector<Node> nodes;
    std::size_t root = 0;

    std::size_t size() const noexcept { return nodes.size(); }
};

Dag fold_to_dag(const Tree& x);
Tree unfold(const Dag& dag);

// One `n<id> [label="<tag>"]` line per node and one
// `n<a> -> n<b> [label="<child index>"]` line per edge, inside a digraph.
std::string dag_to_dot(const Dag& dag);

} // namespace giant

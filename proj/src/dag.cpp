#include "giant/dag.hpp"

#include <functional>
#include <unordered_map>

namespace giant {

namespace {

struct ShapeKey {
    Tag tag;
    std::vector<std::size_t> children;

    friend bool operator==(const ShapeKey&, const ShapeKey&) = default;
};

struct ShapeHash {
    std::size_t operator()(const ShapeKey& k) const noexcept {
        std::size_t h = static_cast<std::size_t>(k.tag) * 0x9e3779b97f4a7c15ULL;
        for (std::size_t c : k.children)
            h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Bottom-up hash-consing: two subtrees get the same canonical id exactly
// when they have the same tag and the same canonical children.
class Folder {
public:
    std::size_t canon(const Tree& t) {
        ShapeKey key{t.tag(), {}};
        if (!t.is_leaf())
            t.for_each_counter([&](const Tree& c) { key.children.push_back(canon(c)); });
        auto [it, inserted] = ids_.try_emplace(key, shapes_.size());
        if (inserted)
            shapes_.push_back(std::move(key));
        return it->second;
    }

    const std::vector<ShapeKey>& shapes() const { return shapes_; }

private:
    std::unordered_map<ShapeKey, std::size_t, ShapeHash> ids_;
    std::vector<ShapeKey> shapes_;
};

} // namespace

Dag fold_to_dag(const Tree& x) {
    Folder folder;
    const std::size_t root = folder.canon(x);
    const auto& shapes = folder.shapes();

    // Renumber in preorder of first visit.
    std::vector<std::size_t> order(shapes.size(), SIZE_MAX);
    Dag dag;
    std::function<std::size_t(std::size_t)> visit = [&](std::size_t c) -> std::size_t {
        if (order[c] != SIZE_MAX)
            return order[c];
        const std::size_t id = dag.nodes.size();
        order[c] = id;
        dag.nodes.push_back({shapes[c].tag, {}});
        std::vector<std::size_t> kids;
        for (std::size_t child : shapes[c].children)
            kids.push_back(visit(child));
        dag.nodes[id].children = std::move(kids);
        return id;
    };
    dag.root = visit(root);
    return dag;
}

Tree unfold(const Dag& dag) {
    std::vector<Tree> built(dag.nodes.size());
    std::vector<bool> done(dag.nodes.size(), false);
    std::function<const Tree&(std::size_t)> build = [&](std::size_t id) -> const Tree& {
        if (!done[id]) {
            const Dag::Node& n = dag.nodes.at(id);
            if (n.tag == Tag::leaf) {
                built[id] = Tree{};
            } else {
                if (n.children.empty())
                    throw DomainError("DAG node without a head");
                std::vector<Tree> kids;
                for (std::size_t c : n.children)
                    kids.push_back(build(c));
                built[id] = Tree::node(n.tag, kids.front(), std::span<const Tree>(kids).subspan(1));
            }
            done[id] = true;
        }
        return built[id];
    };
    return build(dag.root);
}

std::string dag_to_dot(const Dag& dag) {
    std::string out = "digraph giant {\n";
    for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
        const char* label = dag.nodes[id].tag == Tag::leaf ? "T" : (dag.nodes[id].tag == Tag::v ? "V" : "W");
        out += "n" + std::to_string(id) + " [label=\"" + label + "\"]\n";
    }
    for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
        const auto& kids = dag.nodes[id].children;
        for (std::size_t k = 0; k < kids.size(); ++k)
            out += "n" + std::to_string(id) + " -> n" + std::to_string(kids[k]) + " [label=\"" +
                   std::to_string(k) + "\"]\n";
    }
    out += "}\n";
    return out;
}

} // namespace giant

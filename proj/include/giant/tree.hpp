#pragma once
// Hereditarily run-length compressed bijective base-2 numbers.
//
// Reading the digits of a number from the outermost (last applied) one
// inward, they form maximal runs that alternate between o and i. A node
// stores the run lengths minus one, each itself such a tree:
//
//   T           zero
//   V x [y..]   a run of x+1 o digits, then y+1 i digits, then o, ...
//   W x [y..]   the same, starting with a run of i digits
//
// so 42 (digits i,i,o,i,o from the outside) is W (V T []) [T,T,T]. Every
// tree denotes a distinct natural and every natural has exactly one tree.
//
// The counters after the head are kept as an immutable linked chain, so the
// digit constructors only ever touch the outermost run.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "giant/nat_core.hpp"
#include "giant/refnat.hpp"

namespace giant {

enum class Tag : std::uint8_t { leaf, v, w };

class Tree {
public:
    Tree() = default;
    Tree(const Tree&) = default;
    Tree(Tree&&) noexcept = default;
    Tree& operator=(const Tree&) = default;
    Tree& operator=(Tree&&) noexcept = default;
    ~Tree();

    // `tag head [tail...]`; tag must be v or w.
    static Tree node(Tag tag, Tree head, std::span<const Tree> tail = {});
    // `tag head [c1, c2, ...]` where c1, c2, ... are the counters of `rest`
    // (head first). With a leaf `rest` the tail is empty.
    static Tree prepend(Tag tag, Tree head, const Tree& rest);

    Tag tag() const noexcept { return tag_; }
    bool is_leaf() const noexcept { return tag_ == Tag::leaf; }
    bool is_v() const noexcept { return tag_ == Tag::v; }
    bool is_w() const noexcept { return tag_ == Tag::w; }

    // The first counter. Throws DomainError on a leaf.
    const Tree& head() const;
    // The node made of the tail counters, tagged opposite to this one; a
    // leaf when the tail is empty. V x (y:ys) -> W y ys.
    Tree rest() const;
    std::vector<Tree> tail() const;
    std::size_t tail_size() const noexcept;
    // Same counters under another tag.
    Tree with_tag(Tag tag) const;

    // Calls f on the head and then on every tail counter, in order.
    template <class F>
    void for_each_counter(F&& f) const;

    friend bool operator==(const Tree& a, const Tree& b);

private:
    struct Run;

    Tree(Tag tag, std::shared_ptr<const Run> runs) : runs_(std::move(runs)), tag_(tag) {}

    std::shared_ptr<const Run> runs_;
    Tag tag_ = Tag::leaf;
};

struct Tree::Run {
    Tree counter;
    std::shared_ptr<const Run> next;
};

template <class F>
void Tree::for_each_counter(F&& f) const {
    for (const Run* r = runs_.get(); r != nullptr; r = r->next.get())
        f(r->counter);
}

// Digit-level primitives.
Tree apply_o(const Tree& x);
Tree apply_i(const Tree& x);
Tree strip_o(const Tree& x);
Tree strip_i(const Tree& x);
bool ends_o(const Tree& x);

// Overrides picked up by the generic dispatchers.
Tree exp2_fast(const Tree& x);
Tree leftshift_fast(const Tree& k, const Tree& y);
Tree bitsize_fast(const Tree& x);
Tree dual_fast(const Tree& x);
Tree repsize_fast(const Tree& x);
Tree cons_fast(const Tree& x, const Tree& y);
std::pair<Tree, Tree> decons_fast(const Tree& z);
Tree pair_encode_fast(const Tree& x, const Tree& y);
Tree pair_first_fast(const Tree& z);
Tree pair_rest_fast(const Tree& z);
Tree perfect_fast(const Tree& p);

// o applied n(k) times to y, as a single edit of the outermost run.
Tree vmul(const Tree& k, const Tree& y);

// Total number of nodes, leaves included (a leaf alone counts 1).
std::uint64_t node_count(const Tree& x);

// Grammar:
//   tree  := "T" | ctor " " head " [" items "]"
//   ctor  := "V" | "W"
//   head  := "T" | "(" tree ")"
//   items := empty | tree ("," tree)*
Tree parse_tree(std::string_view text);
std::string print_tree(const Tree& x);

// Run-at-a-time conversions to and from the reference representation.
// refnat_from_tree throws DomainError if a run is too long to materialize.
Tree tree_from_refnat(const RefNat& x);
RefNat refnat_from_tree(const Tree& x);
Tree tree_of(std::uint64_t k);

} // namespace giant

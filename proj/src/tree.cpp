#include "giant/tree.hpp"

#include <limits>

namespace giant {

namespace {

Tag flip(Tag t) {
    return t == Tag::v ? Tag::w : Tag::v;
}

} // namespace

Tree::~Tree() {
    std::shared_ptr<const Run> p = std::move(runs_);
    while (p && p.use_count() == 1) {
        std::shared_ptr<const Run> next = std::move(const_cast<Run&>(*p).next);
        p = std::move(next);
    }
}

Tree Tree::node(Tag tag, Tree head, std::span<const Tree> tail) {
    if (tag == Tag::leaf)
        throw DomainError("a node must be tagged V or W");
    std::shared_ptr<const Run> chain;
    for (auto it = tail.rbegin(); it != tail.rend(); ++it)
        chain = std::make_shared<Run>(Run{*it, std::move(chain)});
    return Tree(tag, std::make_shared<Run>(Run{std::move(head), std::move(chain)}));
}

Tree Tree::prepend(Tag tag, Tree head, const Tree& rest) {
    if (tag == Tag::leaf)
        throw DomainError("a node must be tagged V or W");
    return Tree(tag, std::make_shared<Run>(Run{std::move(head), rest.runs_}));
}

const Tree& Tree::head() const {
    if (is_leaf())
        throw DomainError("head of a leaf");
    return runs_->counter;
}

Tree Tree::rest() const {
    if (is_leaf())
        throw DomainError("rest of a leaf");
    if (!runs_->next)
        return Tree{};
    return Tree(flip(tag_), runs_->next);
}

std::vector<Tree> Tree::tail() const {
    std::vector<Tree> out;
    if (is_leaf())
        return out;
    for (const Run* r = runs_->next.get(); r != nullptr; r = r->next.get())
        out.push_back(r->counter);
    return out;
}

std::size_t Tree::tail_size() const noexcept {
    std::size_t n = 0;
    if (is_leaf())
        return n;
    for (const Run* r = runs_->next.get(); r != nullptr; r = r->next.get())
        ++n;
    return n;
}

Tree Tree::with_tag(Tag tag) const {
    if (is_leaf() || tag == Tag::leaf)
        throw DomainError("retagging requires a node and a node tag");
    return Tree(tag, runs_);
}

bool operator==(const Tree& a, const Tree& b) {
    if (a.tag_ != b.tag_)
        return false;
    const Tree::Run* p = a.runs_.get();
    const Tree::Run* q = b.runs_.get();
    while (p != q) {
        if (p == nullptr || q == nullptr || !(p->counter == q->counter))
            return false;
        p = p->next.get();
        q = q->next.get();
    }
    return true;
}

// ---------------------------------------------------------------------------

Tree apply_o(const Tree& x) {
    switch (x.tag()) {
    case Tag::leaf: return Tree::node(Tag::v, Tree{});
    case Tag::v: return Tree::prepend(Tag::v, succ(x.head()), x.rest());
    default: return Tree::prepend(Tag::v, Tree{}, x);
    }
}

Tree apply_i(const Tree& x) {
    switch (x.tag()) {
    case Tag::leaf: return Tree::node(Tag::w, Tree{});
    case Tag::w: return Tree::prepend(Tag::w, succ(x.head()), x.rest());
    default: return Tree::prepend(Tag::w, Tree{}, x);
    }
}

Tree strip_o(const Tree& x) {
    if (!x.is_v())
        throw DomainError("strip_o on a value not ending in o");
    if (x.head().is_leaf())
        return x.rest();
    return Tree::prepend(Tag::v, pred(x.head()), x.rest());
}

Tree strip_i(const Tree& x) {
    if (!x.is_w())
        throw DomainError("strip_i on a value not ending in i");
    if (x.head().is_leaf())
        return x.rest();
    return Tree::prepend(Tag::w, pred(x.head()), x.rest());
}

bool ends_o(const Tree& x) {
    return x.is_v();
}

// ---------------------------------------------------------------------------

Tree exp2_fast(const Tree& x) {
    if (x.is_leaf())
        return Tree::node(Tag::v, Tree{});
    return succ(Tree::node(Tag::v, pred(x)));
}

Tree vmul(const Tree& k, const Tree& y) {
    if (k.is_leaf())
        return y;
    switch (y.tag()) {
    case Tag::leaf: return Tree::node(Tag::v, pred(k));
    case Tag::v: return Tree::prepend(Tag::v, add(pred(k), y.head()), y.rest());
    default: return Tree::prepend(Tag::v, pred(k), y);
    }
}

Tree leftshift_fast(const Tree& k, const Tree& y) {
    if (y.is_leaf())
        return y;
    if (y.is_v())
        return succ(vmul(k, pred(y)));
    return succ(vmul(succ(k), pred(y)));
}

Tree bitsize_fast(const Tree& x) {
    if (x.is_leaf())
        return x;
    const std::vector<Tree> tail = x.tail();
    Tree acc = x.head();
    for (auto it = tail.rbegin(); it != tail.rend(); ++it)
        acc = succ(add(*it, acc));
    return succ(acc);
}

Tree dual_fast(const Tree& x) {
    if (x.is_leaf())
        return x;
    return x.with_tag(flip(x.tag()));
}

Tree repsize_fast(const Tree& x) {
    if (x.is_leaf())
        return x;
    std::vector<Tree> sizes;
    x.for_each_counter([&](const Tree& c) { sizes.push_back(repsize_fast(c)); });
    Tree acc;
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it)
        acc = add(*it, acc);
    return succ(acc);
}

std::uint64_t node_count(const Tree& x) {
    std::uint64_t n = 1;
    if (!x.is_leaf())
        x.for_each_counter([&](const Tree& c) { n += node_count(c); });
    return n;
}

std::pair<Tree, Tree> decons_fast(const Tree& z) {
    if (z.is_leaf())
        throw DomainError("decons of zero");
    Tree rest = z.rest();
    if (rest.is_leaf()) {
        const Tree& x = z.head();
        return {pred(z.is_v() ? apply_o(x) : apply_i(x)), Tree{}};
    }
    return {z.head(), std::move(rest)};
}

Tree cons_fast(const Tree& x, const Tree& y) {
    switch (y.tag()) {
    case Tag::leaf:
        if (x.is_leaf())
            return Tree::node(Tag::v, Tree{});
        if (x.is_v())
            return Tree::node(Tag::w, strip_i(succ(x)));
        return Tree::node(Tag::v, strip_o(succ(x)));
    case Tag::v: return Tree::prepend(Tag::w, x, y);
    default: return Tree::prepend(Tag::v, x, y);
    }
}

Tree pair_encode_fast(const Tree& x, const Tree& y) {
    return succ(vmul(x, pred(apply_o(y))));
}

Tree pair_first_fast(const Tree& z) {
    if (z.is_leaf())
        throw DomainError("pair projection of zero");
    if (z.is_v())
        return Tree{};
    return succ(pred(z).head());
}

Tree pair_rest_fast(const Tree& z) {
    if (z.is_leaf())
        throw DomainError("pair projection of zero");
    if (z.is_v())
        return strip_o(z);
    Tree r = pred(z).rest();
    if (r.is_leaf())
        return r;
    return succ(strip_i(r));
}

Tree perfect_fast(const Tree& p) {
    if (p.is_leaf() || p == one<Tree>())
        throw DomainError("perfect number exponent must be at least 2");
    const Tree q = pred(pred(p));
    const Tree tail[] = {q};
    return succ(Tree::node(Tag::v, q, tail));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void print_into(const Tree& x, std::string& out) {
    if (x.is_leaf()) {
        out += 'T';
        return;
    }
    out += x.is_v() ? "V " : "W ";
    bool first = true;
    x.for_each_counter([&](const Tree& c) {
        if (first) {
            if (c.is_leaf()) {
                out += 'T';
            } else {
                out += '(';
                print_into(c, out);
                out += ')';
            }
            out += " [";
            first = false;
        } else {
            if (out.back() != '[')
                out += ',';
            print_into(c, out);
        }
    });
    out += ']';
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    Tree parse_all() {
        Tree t = tree();
        if (pos_ != text_.size())
            throw ParseError("trailing characters after tree", pos_);
        return t;
    }

private:
    Tree tree() {
        const char c = peek();
        if (c == 'T') {
            ++pos_;
            return Tree{};
        }
        if (c != 'V' && c != 'W')
            throw ParseError("expected 'T', 'V' or 'W'", pos_);
        ++pos_;
        const Tag tag = c == 'V' ? Tag::v : Tag::w;
        expect(' ');
        Tree head;
        if (peek() == 'T') {
            ++pos_;
        } else if (peek() == '(') {
            ++pos_;
            head = tree();
            expect(')');
        } else {
            throw ParseError("expected 'T' or '('", pos_);
        }
        expect(' ');
        expect('[');
        std::vector<Tree> items;
        if (peek() != ']') {
            items.push_back(tree());
            while (peek() == ',') {
                ++pos_;
                items.push_back(tree());
            }
        }
        expect(']');
        return Tree::node(tag, std::move(head), items);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Tree parse_tree(std::string_view text) {
    return TreeParser(text).parse_all();
}

std::string print_tree(const Tree& x) {
    std::string out;
    print_into(x, out);
    return out;
}

// ---------------------------------------------------------------------------
// Conversions

Tree tree_from_refnat(const RefNat& x) {
    struct RunInfo {
        bool o;
        std::size_t length;
    };
    std::vector<RunInfo> runs; // outermost first
    mpz_class v = x.magnitude();
    mpz_class t;
    while (sgn(v) != 0) {
        if (mpz_odd_p(v.get_mpz_t())) {
            // o^L(u) = (u+1) 2^L - 1 with u+1 odd
            t = v + 1;
            const std::size_t len = mpz_scan1(t.get_mpz_t(), 0);
            mpz_fdiv_q_2exp(v.get_mpz_t(), t.get_mpz_t(), len);
            v -= 1;
            runs.push_back({true, len});
        } else {
            // i^L(u) = (u+2) 2^L - 2 with u+2 odd unless u = 0
            t = v + 2;
            std::size_t len = mpz_scan1(t.get_mpz_t(), 0);
            mpz_fdiv_q_2exp(v.get_mpz_t(), t.get_mpz_t(), len);
            if (v == 1) {
                --len;
                v = 0;
            } else {
                v -= 2;
            }
            runs.push_back({false, len});
        }
    }
    if (runs.empty())
        return Tree{};
    std::vector<Tree> counters;
    counters.reserve(runs.size());
    for (const RunInfo& r : runs)
        counters.push_back(tree_from_refnat(RefNat(static_cast<std::uint64_t>(r.length - 1))));
    const Tag tag = runs.front().o ? Tag::v : Tag::w;
    return Tree::node(tag, counters.front(), std::span<const Tree>(counters).subspan(1));
}

RefNat refnat_from_tree(const Tree& x) {
    if (x.is_leaf())
        return RefNat{};
    std::vector<std::pair<bool, mp_bitcnt_t>> runs; // outermost first
    bool o = x.is_v();
    x.for_each_counter([&](const Tree& c) {
        const RefNat len = refnat_from_tree(c);
        if (len.bit_length() > 40)
            throw DomainError("run too long to expand");
        runs.emplace_back(o, static_cast<mp_bitcnt_t>(len.magnitude().get_ui()) + 1);
        o = !o;
    });
    mpz_class v;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        const int offset = it->first ? 1 : 2;
        v += offset;
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), it->second);
        v -= offset;
    }
    return RefNat(std::move(v));
}

Tree tree_of(std::uint64_t k) {
    return tree_from_refnat(RefNat(k));
}

} // namespace giant

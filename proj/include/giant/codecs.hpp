#pragma once
// Bijections between naturals and finite lists, multisets and sets of
// naturals; bitwise operations obtained from ordered-set algebra; and Iso
// combinators that move values and operations between these views.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "giant/nat_core.hpp"

namespace giant {

template <class N>
concept HasFastPair = requires(const N& x) {
    { pair_encode_fast(x, x) } -> std::same_as<N>;
    { pair_first_fast(x) } -> std::same_as<N>;
    { pair_rest_fast(x) } -> std::same_as<N>;
};

// ---------------------------------------------------------------------------
// The pairing bijection (x, y) <-> 2^x (2y + 1)

namespace generic {

template <Natural N>
N pair_encode(const N& x, const N& y) {
    return mul(giant::exp2(x), apply_o(y));
}

template <Natural N>
N pair_first(const N& z) {
    if (is_zero(z))
        throw DomainError("pair projection of zero");
    N r{};
    for (N y = z; !ends_o(y); y = half(y))
        r = succ(r);
    return r;
}

template <Natural N>
N pair_rest(const N& z) {
    if (is_zero(z))
        throw DomainError("pair projection of zero");
    N y = z;
    while (!ends_o(y))
        y = half(y);
    return strip_o(y);
}

} // namespace generic

template <Natural N>
N pair_encode(const N& x, const N& y) {
    if constexpr (HasFastPair<N>)
        return pair_encode_fast(x, y);
    else
        return generic::pair_encode(x, y);
}

// Exponent of the largest power of two dividing z.
template <Natural N>
N pair_first(const N& z) {
    if constexpr (HasFastPair<N>)
        return pair_first_fast(z);
    else
        return generic::pair_first(z);
}

// The odd part of z, as y in 2y + 1.
template <Natural N>
N pair_rest(const N& z) {
    if constexpr (HasFastPair<N>)
        return pair_rest_fast(z);
    else
        return generic::pair_rest(z);
}

// ---------------------------------------------------------------------------
// Lists, multisets, sets

template <Natural N>
std::vector<N> to_list(const N& x) {
    std::vector<N> out;
    for (N z = x; !is_zero(z); z = pair_rest(z))
        out.push_back(pair_first(z));
    return out;
}

template <Natural N>
N from_list(const std::vector<N>& xs) {
    N r{};
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        r = pair_encode(*it, r);
    return r;
}

// Prefix sums.
template <Natural N>
std::vector<N> list_to_mset(const std::vector<N>& ns) {
    std::vector<N> out;
    out.reserve(ns.size());
    N acc{};
    for (const N& n : ns) {
        acc = add(acc, n);
        out.push_back(acc);
    }
    return out;
}

// Pairwise differences; the input must be non-decreasing.
template <Natural N>
std::vector<N> mset_to_list(const std::vector<N>& ms) {
    std::vector<N> out;
    out.reserve(ms.size());
    N prev{};
    for (const N& m : ms) {
        if (cmp(m, prev) < 0)
            throw DomainError("multiset elements must be non-decreasing");
        out.push_back(sub(m, prev));
        prev = m;
    }
    return out;
}

template <Natural N>
std::vector<N> list_to_set(const std::vector<N>& ns) {
    std::vector<N> shifted;
    shifted.reserve(ns.size());
    for (const N& n : ns)
        shifted.push_back(succ(n));
    std::vector<N> out = list_to_mset(shifted);
    for (N& m : out)
        m = pred(m);
    return out;
}

// The input must be strictly ascending.
template <Natural N>
std::vector<N> set_to_list(const std::vector<N>& ss) {
    for (std::size_t k = 1; k < ss.size(); ++k) {
        if (cmp(ss[k - 1], ss[k]) >= 0)
            throw DomainError("set elements must be strictly ascending");
    }
    std::vector<N> shifted;
    shifted.reserve(ss.size());
    for (const N& s : ss)
        shifted.push_back(succ(s));
    std::vector<N> out = mset_to_list(shifted);
    for (N& m : out)
        m = pred(m);
    return out;
}

template <Natural N>
std::vector<N> to_mset(const N& x) {
    return list_to_mset(to_list(x));
}

template <Natural N>
N from_mset(const std::vector<N>& ms) {
    return from_list(mset_to_list(ms));
}

// Positions of the 1 bits of x in ordinary binary, ascending.
template <Natural N>
std::vector<N> to_set(const N& x) {
    return list_to_set(to_list(x));
}

template <Natural N>
N from_set(const std::vector<N>& ss) {
    return from_list(set_to_list(ss));
}

// ---------------------------------------------------------------------------
// Ordered-set algebra on strictly ascending sequences

namespace detail {

// Linear merge keeping the elements selected by the three flags: only in a,
// in both, only in b.
template <Natural N>
std::vector<N> merge_select(const std::vector<N>& a, const std::vector<N>& b, bool keep_a, bool keep_both,
                            bool keep_b) {
    std::vector<N> out;
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < a.size() && q < b.size()) {
        const auto c = cmp(a[p], b[q]);
        if (c < 0) {
            if (keep_a)
                out.push_back(a[p]);
            ++p;
        } else if (c > 0) {
            if (keep_b)
                out.push_back(b[q]);
            ++q;
        } else {
            if (keep_both)
                out.push_back(a[p]);
            ++p;
            ++q;
        }
    }
    if (keep_a)
        out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(p), a.end());
    if (keep_b)
        out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(q), b.end());
    return out;
}

} // namespace detail

template <Natural N>
std::vector<N> set_intersection(const std::vector<N>& a, const std::vector<N>& b) {
    return detail::merge_select(a, b, false, true, false);
}

template <Natural N>
std::vector<N> set_union(const std::vector<N>& a, const std::vector<N>& b) {
    return detail::merge_select(a, b, true, true, true);
}

template <Natural N>
std::vector<N> set_symmetric_difference(const std::vector<N>& a, const std::vector<N>& b) {
    return detail::merge_select(a, b, true, false, true);
}

template <Natural N>
std::vector<N> set_difference(const std::vector<N>& a, const std::vector<N>& b) {
    return detail::merge_select(a, b, true, false, false);
}

// ---------------------------------------------------------------------------
// Bitwise operations through the set view

template <Natural N, class SetOp>
N lift_set_op(SetOp op, const N& x, const N& y) {
    return from_set(op(to_set(x), to_set(y)));
}

template <Natural N>
N l_and(const N& x, const N& y) {
    return lift_set_op(set_intersection<N>, x, y);
}

template <Natural N>
N l_or(const N& x, const N& y) {
    return lift_set_op(set_union<N>, x, y);
}

template <Natural N>
N l_xor(const N& x, const N& y) {
    return lift_set_op(set_symmetric_difference<N>, x, y);
}

template <Natural N>
N l_dif(const N& x, const N& y) {
    return lift_set_op(set_difference<N>, x, y);
}

// Bitwise multiplexer: where x has a 1 take the bit of y, else that of z.
template <Natural N>
N l_ite(const N& x, const N& y, const N& z) {
    const auto d = to_set(x);
    const auto a = to_set(y);
    const auto b = to_set(z);
    const auto c = set_symmetric_difference(a, b);
    const auto e = set_intersection(c, d);
    return from_set(set_symmetric_difference(e, b));
}

// Complement of x within the low `bitlen` bits. Every 1 bit of x must lie
// below bitlen.
template <Natural N>
N l_not(std::uint64_t bitlen, const N& x) {
    const auto xs = to_set(x);
    if (!xs.empty() && cmp(xs.back(), from_u64<N>(bitlen)) >= 0)
        throw DomainError("l_not: operand has bits at or above the bit length");
    std::vector<N> all;
    all.reserve(bitlen);
    for (const N& k : all_from(N{}) | std::views::take(bitlen))
        all.push_back(k);
    return from_set(set_difference(all, xs));
}

// ---------------------------------------------------------------------------
// Isomorphisms between a view and the naturals

template <class N, class View>
struct Iso {
    std::function<N(const View&)> forward;
    std::function<View(const N&)> backward;
};

template <Natural N>
Iso<N, N> nat_iso() {
    return {[](const N& x) { return x; }, [](const N& x) { return x; }};
}

template <Natural N>
Iso<N, std::vector<N>> list_iso() {
    return {[](const std::vector<N>& xs) { return from_list(xs); }, [](const N& x) { return to_list(x); }};
}

template <Natural N>
Iso<N, std::vector<N>> mset_iso() {
    return {[](const std::vector<N>& xs) { return from_mset(xs); }, [](const N& x) { return to_mset(x); }};
}

template <Natural N>
Iso<N, std::vector<N>> set_iso() {
    return {[](const std::vector<N>& xs) { return from_set(xs); }, [](const N& x) { return to_set(x); }};
}

// Moves x from the source view to the target view.
template <class N, class To, class From>
To as(const Iso<N, To>& target, const Iso<N, From>& source, const From& x) {
    return target.backward(source.forward(x));
}

template <class N, class View, class Op>
View lend1(Op op, const Iso<N, View>& iso, const View& x) {
    return iso.backward(op(iso.forward(x)));
}

template <class N, class View, class Op>
View lend2(Op op, const Iso<N, View>& iso, const View& x, const View& y) {
    return iso.backward(op(iso.forward(x), iso.forward(y)));
}

} // namespace giant

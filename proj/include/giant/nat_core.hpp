#pragma once
// Representation-independent natural numbers.
//
// A representation N models `Natural` by providing, as free functions found
// by argument-dependent lookup, the two bijective base-2 digit constructors
// and their inverses:
//
//   apply_o(x)  = 2x + 1         strip_o(apply_o(x)) = x
//   apply_i(x)  = 2x + 2         strip_i(apply_i(x)) = x
//   ends_o(x)   : the outermost digit is o (the value is odd)
//
// A default-constructed N is zero (the empty digit sequence). Every algorithm
// in this header is written purely against that contract. A representation
// may supply a faster equivalent for some of them (exp2_fast, bitsize_fast,
// ...); the dispatching entry points below pick it up automatically, the
// `generic::` versions never do.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <utility>
#include <vector>

#include "giant/errors.hpp"

namespace giant {

template <class N>
concept Natural = std::regular<N> && requires(const N& x) {
    { apply_o(x) } -> std::same_as<N>;
    { apply_i(x) } -> std::same_as<N>;
    { strip_o(x) } -> std::same_as<N>;
    { strip_i(x) } -> std::same_as<N>;
    { ends_o(x) } -> std::convertible_to<bool>;
};

// Optional representation-specific overrides.
template <class N>
concept HasFastExp2 = requires(const N& x) { { exp2_fast(x) } -> std::same_as<N>; };
template <class N>
concept HasFastLeftshift = requires(const N& x) { { leftshift_fast(x, x) } -> std::same_as<N>; };
template <class N>
concept HasFastBitsize = requires(const N& x) { { bitsize_fast(x) } -> std::same_as<N>; };
template <class N>
concept HasFastRepsize = requires(const N& x) { { repsize_fast(x) } -> std::same_as<N>; };
template <class N>
concept HasFastDual = requires(const N& x) { { dual_fast(x) } -> std::same_as<N>; };
template <class N>
concept HasFastCons = requires(const N& x) {
    { cons_fast(x, x) } -> std::same_as<N>;
    { decons_fast(x) } -> std::same_as<std::pair<N, N>>;
};

template <Natural N>
bool is_zero(const N& x) {
    return x == N{};
}

template <Natural N>
bool ends_i(const N& x) {
    return !is_zero(x) && !ends_o(x);
}

template <Natural N>
N one() {
    return apply_o(N{});
}

// Removes the outermost digit, whichever it is.
template <Natural N>
N strip_digit(const N& x) {
    return ends_o(x) ? strip_o(x) : strip_i(x);
}

// ---------------------------------------------------------------------------
// Successor and predecessor

template <Natural N>
N succ(const N& x) {
    N y = x;
    std::size_t carried = 0;
    while (ends_i(y)) {
        y = strip_i(y);
        ++carried;
    }
    N r = is_zero(y) ? apply_o(y) : apply_i(strip_o(y));
    for (; carried > 0; --carried)
        r = apply_o(r);
    return r;
}

// Number of (possibly recursive) successor steps succ(x) performs; one more
// than the length of the trailing run of i digits.
template <Natural N>
std::size_t succ_steps(const N& x) {
    N y = x;
    std::size_t steps = 1;
    while (ends_i(y)) {
        y = strip_i(y);
        ++steps;
    }
    return steps;
}

template <Natural N>
N pred(const N& x) {
    if (is_zero(x))
        throw DomainError("predecessor of zero");
    N y = x;
    std::size_t borrowed = 0;
    N r;
    for (;;) {
        if (!ends_o(y)) {
            r = apply_o(strip_i(y));
            break;
        }
        N inner = strip_o(y);
        if (is_zero(inner))
            break; // pred(1) = 0
        y = std::move(inner);
        ++borrowed;
    }
    for (; borrowed > 0; --borrowed)
        r = apply_i(r);
    return r;
}

// Demand-driven stream x, x+1, x+2, ...
template <Natural N>
class AllFrom : public std::ranges::view_interface<AllFrom<N>> {
public:
    class iterator {
    public:
        using value_type = N;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(N start) : current_(std::move(start)) {}

        const N& operator*() const { return current_; }
        iterator& operator++() {
            current_ = succ(current_);
            return *this;
        }
        void operator++(int) { ++*this; }

    private:
        N current_{};
    };

    AllFrom() = default;
    explicit AllFrom(N start) : start_(std::move(start)) {}

    iterator begin() const { return iterator(start_); }
    std::unreachable_sentinel_t end() const { return {}; }

private:
    N start_{};
};

template <Natural N>
AllFrom<N> all_from(const N& x) {
    return AllFrom<N>(x);
}

// ---------------------------------------------------------------------------
// Addition, subtraction, comparison

template <Natural N>
N add(const N& x0, const N& y0) {
    enum : std::uint8_t { both_o, mixed, both_i };
    N x = x0;
    N y = y0;
    std::vector<std::uint8_t> steps;
    while (!is_zero(x) && !is_zero(y)) {
        const bool xo = ends_o(x);
        const bool yo = ends_o(y);
        x = xo ? strip_o(x) : strip_i(x);
        y = yo ? strip_o(y) : strip_i(y);
        steps.push_back(xo && yo ? both_o : (xo != yo ? mixed : both_i));
    }
    N r = is_zero(x) ? std::move(y) : std::move(x);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (*it) {
        case both_o: r = apply_i(r); break;
        case mixed: r = apply_o(succ(r)); break;
        default: r = apply_i(succ(r)); break;
        }
    }
    return r;
}

template <Natural N>
N sub(const N& x0, const N& y0) {
    enum : std::uint8_t { oo, oi, io, ii };
    N x = x0;
    N y = y0;
    std::vector<std::uint8_t> steps;
    while (!is_zero(y)) {
        if (is_zero(x))
            throw DomainError("subtraction underflow");
        const bool xo = ends_o(x);
        const bool yo = ends_o(y);
        x = xo ? strip_o(x) : strip_i(x);
        y = yo ? strip_o(y) : strip_i(y);
        steps.push_back(xo ? (yo ? oo : oi) : (yo ? io : ii));
    }
    N r = std::move(x);
    try {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            switch (*it) {
            case oo: r = pred(apply_o(r)); break;
            case oi: r = pred(pred(apply_o(r))); break;
            case io: r = apply_o(r); break;
            default: r = pred(apply_o(r)); break;
            }
        }
    } catch (const DomainError&) {
        throw DomainError("subtraction underflow");
    }
    return r;
}

template <Natural N>
std::strong_ordering cmp(const N& x0, const N& y0) {
    // The innermost mixed-digit position decides between otherwise equal
    // digit strings: o < i at the same position.
    N x = x0;
    N y = y0;
    auto tie_break = std::strong_ordering::equal;
    for (;;) {
        const bool xz = is_zero(x);
        const bool yz = is_zero(y);
        if (xz || yz) {
            if (xz && yz)
                return tie_break;
            return xz ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const bool xo = ends_o(x);
        const bool yo = ends_o(y);
        if (xo != yo)
            tie_break = xo ? std::strong_ordering::less : std::strong_ordering::greater;
        x = xo ? strip_o(x) : strip_i(x);
        y = yo ? strip_o(y) : strip_i(y);
    }
}

template <Natural N>
N min2(const N& x, const N& y) {
    return cmp(x, y) < 0 ? x : y;
}

template <Natural N>
N max2(const N& x, const N& y) {
    return cmp(x, y) < 0 ? y : x;
}

// ---------------------------------------------------------------------------
// Multiplication and powers

template <Natural N>
N mul(const N& x, const N& y) {
    if (is_zero(x) || is_zero(y))
        return N{};
    N a = pred(x);
    const N b = pred(y);
    std::vector<bool> digits; // outermost first
    while (!is_zero(a)) {
        const bool o = ends_o(a);
        digits.push_back(o);
        a = o ? strip_o(a) : strip_i(a);
    }
    N r = b;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        r = *it ? apply_o(r) : succ(add(b, apply_o(r)));
    return succ(r);
}

template <Natural N>
N twice(const N& x) {
    return pred(apply_o(x));
}

template <Natural N>
N half(const N& x) {
    if (!ends_i(x))
        throw DomainError("half of an odd number or zero");
    return succ(strip_i(x));
}

template <Natural N>
N pow(const N& x, const N& y) {
    if (is_zero(y))
        return one<N>();
    const N sq = mul(x, x);
    if (ends_o(y))
        return mul(x, pow(sq, strip_o(y)));
    return mul(sq, pow(sq, strip_i(y)));
}

namespace generic {

template <Natural N>
N exp2(const N& x) {
    N k = x;
    N r = one<N>();
    while (!is_zero(k)) {
        k = pred(k);
        r = twice(r);
    }
    return r;
}

} // namespace generic

template <Natural N>
N exp2(const N& x) {
    if constexpr (HasFastExp2<N>)
        return exp2_fast(x);
    else
        return generic::exp2(x);
}

namespace generic {

template <Natural N>
N leftshift(const N& x, const N& y) {
    return mul(giant::exp2(x), y);
}

} // namespace generic

// 2^x * y
template <Natural N>
N leftshift(const N& x, const N& y) {
    if constexpr (HasFastLeftshift<N>)
        return leftshift_fast(x, y);
    else
        return generic::leftshift(x, y);
}

// ---------------------------------------------------------------------------
// Division

template <Natural N>
std::pair<N, N> div_and_rem(const N& x, const N& y) {
    if (is_zero(y))
        throw DomainError("division by zero");
    std::vector<N> exponents;
    N rest = x;
    while (cmp(rest, y) >= 0) {
        // largest q with y * 2^q <= rest
        N doubled = y;
        N k{};
        while (cmp(rest, doubled) >= 0) {
            doubled = twice(doubled);
            k = succ(k);
        }
        N q = pred(k);
        rest = sub(rest, mul(exp2(q), y));
        exponents.push_back(std::move(q));
    }
    N quotient{};
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it)
        quotient = add(exp2(*it), quotient);
    return {std::move(quotient), std::move(rest)};
}

template <Natural N>
N divide(const N& x, const N& y) {
    return div_and_rem(x, y).first;
}

template <Natural N>
N remainder(const N& x, const N& y) {
    return div_and_rem(x, y).second;
}

// ---------------------------------------------------------------------------
// Conversions

// Value-preserving import from another representation, digit by digit.
template <Natural To, Natural From>
To view(const From& x) {
    if constexpr (std::same_as<To, From>) {
        return x;
    } else {
        std::vector<bool> digits; // outermost first, true = o
        for (From y = x; !is_zero(y);) {
            const bool o = ends_o(y);
            digits.push_back(o);
            y = o ? strip_o(y) : strip_i(y);
        }
        To r{};
        for (auto it = digits.rbegin(); it != digits.rend(); ++it)
            r = *it ? apply_o(r) : apply_i(r);
        return r;
    }
}

template <Natural N>
N from_u64(std::uint64_t k) {
    std::vector<bool> digits;
    while (k != 0) {
        const bool o = (k & 1) != 0;
        digits.push_back(o);
        k = o ? (k - 1) / 2 : (k - 2) / 2;
    }
    N r{};
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        r = *it ? apply_o(r) : apply_i(r);
    return r;
}

template <Natural N>
std::uint64_t to_u64(const N& x) {
    std::vector<bool> digits;
    for (N y = x; !is_zero(y);) {
        const bool o = ends_o(y);
        digits.push_back(o);
        if (digits.size() > 64)
            throw DomainError("value does not fit in 64 bits");
        y = o ? strip_o(y) : strip_i(y);
    }
    unsigned __int128 r = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        r = 2 * r + (*it ? 1 : 2);
    if (r > UINT64_MAX)
        throw DomainError("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(r);
}

// ---------------------------------------------------------------------------
// Digit-level special computations

namespace generic {

// Swaps every o digit with i and vice versa.
template <Natural N>
N dual(const N& x) {
    std::vector<bool> digits;
    for (N y = x; !is_zero(y);) {
        const bool o = ends_o(y);
        digits.push_back(o);
        y = o ? strip_o(y) : strip_i(y);
    }
    N r{};
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        r = *it ? apply_i(r) : apply_o(r);
    return r;
}

// Number of bijective base-2 digits.
template <Natural N>
N bitsize(const N& x) {
    N r{};
    for (N y = x; !is_zero(y); y = strip_digit(y))
        r = succ(r);
    return r;
}

} // namespace generic

template <Natural N>
N dual(const N& x) {
    if constexpr (HasFastDual<N>)
        return dual_fast(x);
    else
        return generic::dual(x);
}

template <Natural N>
N bitsize(const N& x) {
    if constexpr (HasFastBitsize<N>)
        return bitsize_fast(x);
    else
        return generic::bitsize(x);
}

namespace generic {

template <Natural N>
N repsize(const N& x) {
    return giant::bitsize(x);
}

} // namespace generic

// Size of the representation; the digit count unless the representation
// knows better.
template <Natural N>
N repsize(const N& x) {
    if constexpr (HasFastRepsize<N>)
        return repsize_fast(x);
    else
        return generic::repsize(x);
}

namespace detail {

template <Natural N>
N ocount(const N& x) {
    N r{};
    for (N y = x; ends_o(y); y = strip_o(y))
        r = succ(r);
    return r;
}

template <Natural N>
N icount(const N& x) {
    N r{};
    for (N y = x; ends_i(y); y = strip_i(y))
        r = succ(r);
    return r;
}

template <Natural N>
N otrim(const N& x) {
    N y = x;
    while (ends_o(y))
        y = strip_o(y);
    return y;
}

template <Natural N>
N itrim(const N& x) {
    N y = x;
    while (ends_i(y))
        y = strip_i(y);
    return y;
}

// Applies o (resp. i) n(k) times to y.
template <Natural N>
N otimes(const N& k, const N& y) {
    N n = k;
    N r = y;
    while (!is_zero(n)) {
        n = pred(n);
        r = apply_o(r);
    }
    return r;
}

template <Natural N>
N itimes(const N& k, const N& y) {
    N n = k;
    N r = y;
    while (!is_zero(n)) {
        n = pred(n);
        r = apply_i(r);
    }
    return r;
}

} // namespace detail

namespace generic {

// Splits off the outermost run of equal digits: a bijection from the
// positive naturals onto pairs.
template <Natural N>
std::pair<N, N> decons(const N& z) {
    if (is_zero(z))
        throw DomainError("decons of zero");
    if (ends_o(z)) {
        N x0 = pred(detail::ocount(z));
        N y = detail::otrim(z);
        N x = is_zero(y) ? pred(apply_o(x0)) : std::move(x0);
        return {std::move(x), std::move(y)};
    }
    N x0 = pred(detail::icount(z));
    N y = detail::itrim(z);
    N x = is_zero(y) ? pred(apply_i(x0)) : std::move(x0);
    return {std::move(x), std::move(y)};
}

template <Natural N>
N cons(const N& x, const N& y) {
    if (is_zero(y)) {
        if (is_zero(x))
            return one<N>();
        if (ends_o(x))
            return detail::itimes(succ(strip_i(succ(x))), N{});
        return detail::otimes(succ(strip_o(succ(x))), N{});
    }
    if (ends_o(y))
        return detail::itimes(succ(x), y);
    return detail::otimes(succ(x), y);
}

} // namespace generic

template <Natural N>
std::pair<N, N> decons(const N& z) {
    if constexpr (HasFastCons<N>)
        return decons_fast(z);
    else
        return generic::decons(z);
}

template <Natural N>
N cons(const N& x, const N& y) {
    if constexpr (HasFastCons<N>)
        return cons_fast(x, y);
    else
        return generic::cons(x, y);
}

// List bijection built on cons/decons.
template <Natural N>
std::vector<N> to_list_alt(const N& x) {
    std::vector<N> out;
    for (N z = x; !is_zero(z);) {
        auto [hd, tl] = decons(z);
        out.push_back(std::move(hd));
        z = std::move(tl);
    }
    return out;
}

template <Natural N>
N from_list_alt(const std::vector<N>& xs) {
    N r{};
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        r = cons(*it, r);
    return r;
}

} // namespace giant

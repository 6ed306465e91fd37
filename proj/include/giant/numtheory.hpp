#pragma once
// Special numbers, primes, the Lucas-Lehmer test and a few recursive
// workloads, all written against the generic natural-number contract.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "giant/codecs.hpp"
#include "giant/nat_core.hpp"

namespace giant {

template <class N>
concept HasFastPerfect = requires(const N& p) { { perfect_fast(p) } -> std::same_as<N>; };

// 2^p - 1
template <Natural N>
N mersenne(const N& p) {
    return pred(exp2(p));
}

// 2^(2^p) + 1
template <Natural N>
N fermat(const N& p) {
    return succ(exp2(exp2(p)));
}

namespace generic {

// 2^(p-1) (2^p - 1), for p >= 2.
template <Natural N>
N perfect(const N& p) {
    if (cmp(p, from_u64<N>(2)) < 0)
        throw DomainError("perfect number exponent must be at least 2");
    return mul(giant::exp2(pred(p)), mersenne(p));
}

} // namespace generic

template <Natural N>
N perfect(const N& p) {
    if constexpr (HasFastPerfect<N>)
        return perfect_fast(p);
    else
        return generic::perfect(p);
}

// ---------------------------------------------------------------------------
// Primes by trial division against the primes found so far.

template <Natural N>
class PrimeStream {
public:
    PrimeStream() = default;

    N next() {
        if (found_.empty()) {
            found_.push_back(from_u64<N>(2));
            candidate_ = from_u64<N>(3);
            return found_.back();
        }
        for (;;) {
            N n = candidate_;
            candidate_ = succ(succ(candidate_));
            if (smallest_factor(n) == n) {
                found_.push_back(n);
                return n;
            }
        }
    }

private:
    N smallest_factor(const N& n) const {
        for (const N& p : found_) {
            if (cmp(mul(p, p), n) > 0)
                return n;
            if (is_zero(div_and_rem(n, p).second))
                return p;
        }
        // Some known prime always exceeds sqrt(n) by the time n is tested.
        throw std::logic_error("prime table exhausted");
    }

    std::vector<N> found_;
    N candidate_{};
};

template <Natural N>
std::vector<N> first_primes(std::size_t count) {
    PrimeStream<N> ps;
    std::vector<N> out;
    out.reserve(count);
    while (out.size() < count)
        out.push_back(ps.next());
    return out;
}

// ---------------------------------------------------------------------------
// Lucas-Lehmer

// k mod (m - 1) for m = 2^p, folding the high part onto the low part. Only
// k == m - 1 is reduced to zero directly.
template <Natural N>
N fastmod(const N& k, const N& m) {
    const N m_minus_1 = pred(m);
    N x = k;
    for (;;) {
        if (x == m_minus_1)
            return N{};
        if (cmp(x, m) < 0)
            return x;
        auto [q, r] = div_and_rem(x, m);
        x = add(q, r);
    }
}

// True when the residue after p - 2 squarings is zero. p = 2 yields false
// (the iteration never runs and the seed 4 is returned).
template <Natural N>
bool lucas_lehmer(const N& p) {
    const N four = apply_i(apply_o(N{}));
    const N m = exp2(p);
    N k = pred(pred(p));
    N x = four;
    while (!is_zero(k)) {
        k = pred(k);
        x = fastmod(pred(pred(mul(x, x))), m);
    }
    return is_zero(x);
}

template <Natural N>
class MersenneExponentStream {
public:
    N next() {
        for (;;) {
            N p = primes_.next();
            if (lucas_lehmer(p))
                return p;
        }
    }

private:
    PrimeStream<N> primes_;
};

template <Natural N>
class MersennePrimeStream {
public:
    N next() { return pred(exp2(exps_.next())); }

private:
    MersenneExponentStream<N> exps_;
};

// ---------------------------------------------------------------------------
// Recursive workloads

template <Natural N>
N ack(const N& m0, const N& n0) {
    N m = m0;
    N n = n0;
    while (!is_zero(m)) {
        if (is_zero(n)) {
            m = pred(m);
            n = one<N>();
        } else {
            n = ack(m, pred(n));
            m = pred(m);
        }
    }
    return succ(n);
}

// Odd part of 3n + 2, as y in 2y + 1.
template <Natural N>
N syracuse(const N& n) {
    return pair_rest(add(n, apply_i(n)));
}

// Iterates syracuse from n until zero; the result starts with n and ends
// with 0.
template <Natural N>
std::vector<N> nsyr(const N& n) {
    std::vector<N> out;
    N x = n;
    while (!is_zero(x)) {
        out.push_back(x);
        x = syracuse(x);
    }
    out.push_back(N{});
    return out;
}

// f applied n(k) times to x.
template <Natural N, class F>
N kth(F f, const N& k, const N& x) {
    N n = k;
    N r = x;
    while (!is_zero(n)) {
        n = pred(n);
        r = f(r);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Identities between digit iteration and powers of two

template <Natural N>
struct IdentityCheck {
    bool holds;
    N lhs;
    N rhs;
};

// 2^k = succ(o^k(0))
template <Natural N>
IdentityCheck<N> check_pow2_by_o_iteration(const N& k) {
    const N two = apply_i(N{});
    N lhs = pow(two, k);
    N rhs = succ(kth([](const N& v) { return apply_o(v); }, k, N{}));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

// 2^k = succ(succ(i^(k-1)(0))), k >= 1
template <Natural N>
IdentityCheck<N> check_pow2_by_i_iteration(const N& k) {
    const N two = apply_i(N{});
    N lhs = pow(two, k);
    N rhs = succ(succ(kth([](const N& v) { return apply_i(v); }, pred(k), N{})));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

// o^n(b) = 2^n (b + 1) - 1
template <Natural N>
IdentityCheck<N> check_o_iteration_product(const N& n, const N& b) {
    const N two = apply_i(N{});
    N lhs = kth([](const N& v) { return apply_o(v); }, n, b);
    N rhs = pred(mul(pow(two, n), succ(b)));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

// 2^x y = succ(o^x(y - 1)), y >= 1
template <Natural N>
IdentityCheck<N> check_shift_by_o_iteration(const N& x, const N& y) {
    const N two = apply_i(N{});
    N lhs = mul(pow(two, x), y);
    N rhs = succ(kth([](const N& v) { return apply_o(v); }, x, pred(y)));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

} // namespace giant

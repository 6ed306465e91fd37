#pragma once
// Independent oracles and generators shared by the test suites. Nothing here
// calls the library's own conversions: values are read and built through the
// five digit primitives and checked against native integer arithmetic.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "giant/giant.hpp"

namespace giant::test {

// Value of x, read digit by digit. x must fit in 64 bits.
template <Natural N>
std::uint64_t u64_of(const N& x) {
    std::vector<bool> digits;  // true for o, outermost first
    for (N y = x; !(y == N{});) {
        const bool o = ends_o(y);
        digits.push_back(o);
        y = o ? strip_o(y) : strip_i(y);
    }
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = 2 * v + (*it ? 1 : 2);
    return v;
}

// The natural k, built digit by digit.
template <Natural N>
N make(std::uint64_t k) {
    std::vector<bool> digits;  // outermost first
    while (k != 0) {
        const bool o = (k & 1) != 0;
        digits.push_back(o);
        k = o ? (k - 1) / 2 : (k - 2) / 2;
    }
    N x{};
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        x = *it ? apply_o(x) : apply_i(x);
    return x;
}

// Number of bijective base-2 digits of k: floor(log2(k + 1)).
inline std::uint64_t bij_digits(std::uint64_t k) {
    std::uint64_t n = 0;
    for (unsigned __int128 v = static_cast<unsigned __int128>(k) + 1; v > 1; v >>= 1)
        ++n;
    return n;
}

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p])
            continue;
        out.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p)
            composite[q] = true;
    }
    return out;
}

inline bool is_prime_by_trial_division(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

// Exponents in the 2^x (2y + 1) factorization chain of k.
inline std::vector<std::uint64_t> list_by_factoring(std::uint64_t k) {
    std::vector<std::uint64_t> out;
    while (k != 0) {
        std::uint64_t x = 0;
        while (k % 2 == 0) {
            k /= 2;
            ++x;
        }
        out.push_back(x);
        k = (k - 1) / 2;
    }
    return out;
}

inline std::vector<std::uint64_t> bit_positions(std::uint64_t k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t b = 0; b < 64; ++b) {
        if ((k >> b) & 1)
            out.push_back(b);
    }
    return out;
}

template <Natural N>
std::vector<std::uint64_t> u64s_of(const std::vector<N>& xs) {
    std::vector<std::uint64_t> out;
    for (const N& x : xs)
        out.push_back(u64_of(x));
    return out;
}

template <Natural N>
std::vector<N> make_all(const std::vector<std::uint64_t>& ks) {
    std::vector<N> out;
    for (std::uint64_t k : ks)
        out.push_back(make<N>(k));
    return out;
}

// Structural generator: a leaf with probability 1/2, otherwise V or W with a
// head and 0..3 tail counters, recursively, to at most `depth` levels.
inline Tree random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> tail_len(0, 3);
    if (depth == 0 || coin(rng) == 0)
        return Tree{};
    const Tag tag = coin(rng) == 0 ? Tag::v : Tag::w;
    Tree head = random_tree(rng, depth - 1);
    std::vector<Tree> tail;
    for (int k = tail_len(rng); k > 0; --k)
        tail.push_back(random_tree(rng, depth - 1));
    return Tree::node(tag, std::move(head), tail);
}

// Bijective digit count of t if it is at most `cap`, without ever doing
// arithmetic on counters wider than 62 digits.
inline std::optional<std::uint64_t> digit_count(const Tree& t, std::uint64_t cap) {
    std::uint64_t total = 0;
    bool fits = true;
    t.for_each_counter([&](const Tree& c) {
        if (!fits)
            return;
        if (!digit_count(c, 62)) {
            fits = false;
            return;
        }
        total += u64_of(c) + 1;
        fits = total <= cap;
    });
    if (!fits)
        return std::nullopt;
    return total;
}

// True when every run, at every level of t, has at most `limit` digits.
// succ and pred walk a run one digit at a time and recurse into the
// counters they touch, so this bounds their cost.
inline bool runs_at_most(const Tree& t, std::uint64_t limit) {
    bool ok = true;
    t.for_each_counter([&](const Tree& c) {
        ok = ok && digit_count(c, 62) && u64_of(c) < limit && runs_at_most(c, limit);
    });
    return ok;
}

} // namespace giant::test

#include "giant/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "giant/giant.hpp"

namespace giant::bench {

namespace {

constexpr std::uint64_t prime45 = 43112609;

template <Natural N>
std::string decimal(const N& x) {
    return view<RefNat>(x).to_decimal();
}

template <Natural N>
std::vector<N> naturals(std::uint64_t first, std::uint64_t step, std::uint64_t last) {
    std::vector<N> out;
    for (std::uint64_t v = first; v <= last; v += step)
        out.push_back(from_u64<N>(v));
    return out;
}

// Times `work` and turns its result into a digest afterwards.
template <class Work, class Digest>
BenchResult timed(std::string_view name, Rep rep, Work work, Digest digest) {
    const auto start = std::chrono::steady_clock::now();
    auto result = work();
    const auto stop = std::chrono::steady_clock::now();
    return {std::string(name), rep, std::chrono::duration<double, std::milli>(stop - start).count(),
            digest(result)};
}

template <Natural N>
BenchResult ackermann(Rep rep) {
    return timed(
        "ack", rep, [] { return ack(from_u64<N>(3), from_u64<N>(7)); },
        [](const N& r) { return decimal(r); });
}

template <Natural N>
BenchResult exp2_twice(Rep rep) {
    return timed(
        "exp2", rep, [] { return exp2(exp2(from_u64<N>(14))); },
        [](const N& r) { return decimal(bitsize(r)); });
}

template <Natural N>
BenchResult sparse_set(Rep rep) {
    const auto ps = naturals<N>(101, 1901, 100000);
    return timed(
        "sparse", rep, [&] { return bitsize(from_set(ps)); }, [](const N& r) { return decimal(r); });
}

template <Natural N>
BenchResult first_100_primes(Rep rep) {
    return timed(
        "primes", rep, [] { return first_primes<N>(100).back(); }, [](const N& r) { return decimal(r); });
}

template <Natural N>
BenchResult seventh_mersenne_prime(Rep rep) {
    return timed(
        "mersenne", rep,
        [] {
            MersennePrimeStream<N> ms;
            N last;
            for (int k = 0; k < 7; ++k)
                last = ms.next();
            return last;
        },
        [](const N& r) { return decimal(r); });
}

template <Natural N>
std::vector<std::vector<N>> syracuse_paths(std::uint64_t upto) {
    std::vector<std::vector<N>> out;
    for (const N& k : all_from(N{}) | std::views::take(upto + 1))
        out.push_back(nsyr(k));
    return out;
}

template <Natural N>
BenchResult syracuse_lengths(Rep rep) {
    return timed(
        "syracuse", rep,
        [] {
            std::size_t longest = 0;
            for (const auto& path : syracuse_paths<N>(2000))
                longest = std::max(longest, path.size());
            return longest;
        },
        [](std::size_t r) { return std::to_string(r); });
}

template <Natural N>
BenchResult compress_syracuse(Rep rep) {
    return timed(
        "compress-syr", rep,
        [] {
            N widest{};
            for (const auto& path : syracuse_paths<N>(100))
                widest = max2(widest, bitsize(from_list(path)));
            return widest;
        },
        [](const N& r) { return decimal(r); });
}

BenchResult compress_syracuse_twice(Rep rep) {
    return timed(
        "compress-syr-twice", rep,
        [] {
            std::vector<Tree> codes;
            for (const auto& path : syracuse_paths<Tree>(20))
                codes.push_back(from_list(path));
            return bitsize(from_list(codes));
        },
        [](const Tree& r) { return decimal(bitsize(r)); });
}

BenchResult bitsize_mersenne45(Rep rep) {
    return timed(
        "bitsize45", rep, [] { return bitsize(mersenne(tree_of(prime45))); },
        [](const Tree& r) { return decimal(r); });
}

BenchResult bitsize_perfect45(Rep rep) {
    return timed(
        "perfect45", rep, [] { return bitsize(perfect(tree_of(prime45))); },
        [](const Tree& r) { return decimal(r); });
}

BenchResult large_leftshift(Rep rep) {
    return timed(
        "leftshift45", rep,
        [] {
            const Tree n = tree_of(prime45);
            return leftshift(n, n);
        },
        [](const Tree& r) { return decimal(bitsize(r)); });
}

struct Suite {
    std::string name;
    std::function<BenchResult(Rep)> on_tree;
    std::function<BenchResult(Rep)> on_bij;     // empty: refused
    std::function<BenchResult(Rep)> on_refnat;  // empty: refused
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = {
        {"ack", ackermann<Tree>, ackermann<BijDigits>, ackermann<RefNat>},
        {"exp2", exp2_twice<Tree>, exp2_twice<BijDigits>, exp2_twice<RefNat>},
        {"sparse", sparse_set<Tree>, sparse_set<BijDigits>, sparse_set<RefNat>},
        {"bitsize45", bitsize_mersenne45, {}, {}},
        {"perfect45", bitsize_perfect45, {}, {}},
        {"leftshift45", large_leftshift, {}, {}},
        {"primes", first_100_primes<Tree>, first_100_primes<BijDigits>, first_100_primes<RefNat>},
        {"mersenne", seventh_mersenne_prime<Tree>, seventh_mersenne_prime<BijDigits>,
         seventh_mersenne_prime<RefNat>},
        {"syracuse", syracuse_lengths<Tree>, syracuse_lengths<BijDigits>, syracuse_lengths<RefNat>},
        {"compress-syr", compress_syracuse<Tree>, compress_syracuse<BijDigits>, compress_syracuse<RefNat>},
        {"compress-syr-twice", compress_syracuse_twice, {}, {}},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Suite& s : registry())
            out.push_back(s.name);
        return out;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_rep(std::string_view rep) {
    return rep == "t" || rep == "b" || rep == "n";
}

BenchResult run(std::string_view suite, Rep rep) {
    for (const Suite& s : registry()) {
        if (s.name != suite)
            continue;
        const std::function<BenchResult(Rep)>* body = nullptr;
        switch (rep) {
        case 't': body = &s.on_tree; break;
        case 'b': body = &s.on_bij; break;
        case 'n': body = &s.on_refnat; break;
        default: throw std::invalid_argument("unknown representation '" + std::string(1, rep) + "'");
        }
        if (!*body)
            return {s.name, rep, std::nullopt, {}};
        return (*body)(rep);
    }
    throw std::invalid_argument("unknown benchmark suite '" + std::string(suite) + "'");
}

std::string format(const BenchResult& r) {
    std::string line = r.name + ' ' + r.rep + ' ';
    if (!r.elapsed_ms)
        return line + '?';
    return line + std::to_string(static_cast<long long>(*r.elapsed_ms + 0.5)) + ' ' + r.digest;
}

} // namespace giant::bench

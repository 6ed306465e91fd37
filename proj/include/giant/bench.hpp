#pragma once
// Timed benchmark workloads, runnable on each of the three representations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace giant::bench {

// 't' (Tree), 'b' (BijDigits) or 'n' (RefNat).
using Rep = char;

struct BenchResult {
    std::string name;
    Rep rep = 't';
    // Empty when the workload is out of reach for this representation.
    std::optional<double> elapsed_ms;
    std::string digest;
};

// Registered suite names, in run order.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);
bool is_rep(std::string_view rep);

// Runs one suite on one representation. Throws std::invalid_argument on an
// unknown suite or representation.
BenchResult run(std::string_view suite, Rep rep);

// `name rep elapsed_ms digest`, or `name rep ?` for refused runs.
std::string format(const BenchResult& r);

} // namespace giant::bench

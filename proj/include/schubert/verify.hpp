#pragma once

// Verification suites: "paper-examples", "s4", "s5". Work fans out over a
// thread pool; results are merged in a fixed order so reports only depend on
// the seed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "schubert/io.hpp"
#include "schubert/perm.hpp"

namespace schubert {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    json to_json() const;
};

/// Throws std::invalid_argument for an unknown suite. threads == 0 uses
/// hardware concurrency.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, unsigned threads = 0);

/// splitmix64 finalizer; derives independent seeds from (seed, stream).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// `count` distinct permutations of Σ_n chosen with the seed, always
/// containing the listed ones first.
std::vector<Permutation> sample_permutations(int n, std::size_t count, std::uint64_t seed,
                                             const std::vector<Permutation>& required = {});

/// body(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, F&& body, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace schubert

// sweep.hpp — parallel evaluation of the cycle over a (t1, t2) grid
//
// The hot stroke depends only on t1 and the cold stroke only on t2, so a grid of
// n1 x n2 points needs n1 + n2 stroke solves; grid points are then combined from
// the per-stroke end data. Results are ordered t1-major and do not depend on the
// worker count.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qotto/energetics.hpp"
#include "qotto/engine.hpp"

namespace qotto {

struct Axis {
    double min{1.0};
    double max{60.0};
    std::size_t count{60};

    // count evenly spaced values from min to max inclusive; count == 1 gives {min}.
    std::vector<double> values() const;
};

struct SweepPoint {
    double t1{0.0};
    double t2{0.0};
    std::optional<EnergyLedger> ledger;  // empty when the point failed
    std::string error;
};

struct SweepOptions {
    Backend backend{Backend::tcl2};
    double step{0.0};  // 0 selects default_step per stroke
    unsigned workers{1};
};

std::vector<SweepPoint> run_sweep(const EngineParams& base, const Axis& t1_axis, const Axis& t2_axis,
                                  const SweepOptions& options);

// Run `count` independent jobs on up to `workers` threads; job(i) must only write
// state owned by index i.
template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job&& job) {
    const std::size_t threads = std::min<std::size_t>(std::max(workers, 1u), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
        });
    }
}

}  // namespace qotto

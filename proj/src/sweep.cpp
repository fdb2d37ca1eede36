#include "qotto/sweep.hpp"

#include <exception>
#include <stdexcept>

#include "qotto/cycle.hpp"

namespace qotto {

std::vector<double> Axis::values() const {
    if (count == 0) throw std::invalid_argument("axis count must be at least 1");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = min;
        return out;
    }
    const double span = max - min;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = min + span * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = max;
    return out;
}

namespace {

struct LegResult {
    std::optional<StrokeEnds> ends;
    std::string error;
};

LegResult solve_leg(const EngineParams& engine, Leg leg, const SweepOptions& options) {
    LegResult r;
    try {
        r.ends = StrokeEnds::of(solve_stroke(engine, leg, options.backend, options.step));
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const EngineParams& base, const Axis& t1_axis, const Axis& t2_axis,
                                  const SweepOptions& options) {
    base.validate();
    const auto t1s = t1_axis.values();
    const auto t2s = t2_axis.values();
    for (double t : t1s) if (!(t > 0.0)) throw std::invalid_argument("t1 values must be positive");
    for (double t : t2s) if (!(t > 0.0)) throw std::invalid_argument("t2 values must be positive");

    // Jobs [0, n1) solve hot strokes, [n1, n1 + n2) cold strokes.
    std::vector<LegResult> legs(t1s.size() + t2s.size());
    parallel_for(legs.size(), options.workers, [&](std::size_t i) {
        EngineParams engine = base;
        if (i < t1s.size()) {
            engine.t1 = t1s[i];
            legs[i] = solve_leg(engine, Leg::hot, options);
        } else {
            engine.t2 = t2s[i - t1s.size()];
            legs[i] = solve_leg(engine, Leg::cold, options);
        }
    });

    std::vector<SweepPoint> points(t1s.size() * t2s.size());
    for (std::size_t i = 0; i < t1s.size(); ++i) {
        for (std::size_t j = 0; j < t2s.size(); ++j) {
            SweepPoint& pt = points[i * t2s.size() + j];
            pt.t1 = t1s[i];
            pt.t2 = t2s[j];
            const LegResult& hot = legs[i];
            const LegResult& cold = legs[t1s.size() + j];
            if (!hot.ends) {
                pt.error = "hot stroke: " + hot.error;
                continue;
            }
            if (!cold.ends) {
                pt.error = "cold stroke: " + cold.error;
                continue;
            }
            EngineParams engine = base;
            engine.t1 = pt.t1;
            engine.t2 = pt.t2;
            try {
                pt.ledger = energy_ledger(engine, *hot.ends, *cold.ends);
            } catch (const std::exception& e) {
                pt.error = e.what();
            }
        }
    }
    return points;
}

}  // namespace qotto

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dybmo/rational.hpp"

namespace dybmo {

// Subinterval of the circle in normalized coordinates (fraction of the
// full turn; multiply by 2*pi for radians). The arc is the half-open
// set (start, start+length] taken modulo 1; length 1 is the full circle.
struct Arc {
    Rat start;   // in [0, 1)
    Rat length;  // in (0, 1]

    Arc() : start(0), length(1) {}
    Arc(Rat s, Rat len);

    Rat end_unwrapped() const { return start + length; }
    bool wraps() const { return start + length > 1; }
    bool is_full_circle() const { return length == 1; }

    // t is taken modulo 1; the arc is half-open at its start.
    bool contains_point(const Rat& t) const;
    bool contains_arc(const Arc& other) const;

    bool operator==(const Arc& o) const { return start == o.start && length == o.length; }
};

// Computes d(delta) = min over n >= 0 of dist(2^n * delta, Z), exactly.
// The doubling orbit of a rational p/q visits at most q points, so the
// infimum is a minimum over one pass around the orbit cycle.
// Zero exactly when delta is a dyadic rational (including 0).
Rat dyadic_distance(const Rat& delta);

// min over i != j of dyadic_distance((delta_i - delta_j) mod 1).
Rat pairwise_distance(const std::vector<Rat>& deltas);

// A filtration shift delta together with its memoized dyadic distance.
// Admissible iff the distance is positive (reduced denominator of delta
// not a power of two).
class Shift {
  public:
    Shift() : delta_(0), distance_(0) {}
    explicit Shift(Rat delta);

    const Rat& delta() const { return delta_; }
    const Rat& distance() const { return distance_; }
    bool admissible() const { return distance_ > 0; }
    bool is_base() const { return delta_ == 0; }

    bool operator==(const Shift& o) const { return delta_ == o.delta_; }

  private:
    Rat delta_;
    Rat distance_;
};

// The level-n, index-k interval of the delta-translated dyadic
// filtration: as an arc, ((delta + k*2^-n) mod 1, ... + 2^-n].
struct DyadicInterval {
    int level = 0;         // n >= 0
    std::int64_t index = 0;  // 0 <= k < 2^n
    Shift shift;           // base filtration when delta = 0

    DyadicInterval() = default;
    DyadicInterval(int n, std::int64_t k, Shift s);

    Rat length() const { return pow2(-level); }
    DyadicInterval parent() const;
    DyadicInterval child(int which) const;  // which in {0, 1}
};

// Coordinate realization of a translated dyadic interval.
Arc interval_bounds(const DyadicInterval& d);

// Which of the two candidate filtrations produced a fit.
enum class FitFiltration { Base, Shifted };

const char* to_string(FitFiltration f);

// Certificate that `interval` contains the input arc with
// interval.length / arc.length = ratio <= 2/d(delta).
struct FitResult {
    FitFiltration filtration = FitFiltration::Base;
    DyadicInterval interval;
    Rat ratio;
};

// The fitting algorithm of the two-filtration proposition. Requires an
// admissible shift. When both filtrations fit, the base one is returned.
FitResult fit_interval(const Arc& arc, const Shift& shift);

// True iff the level-n grid {anchor + k*2^-n : k in Z} meets the open
// arc (start, start+length) modulo 1. Exposed for the multi-shift cube
// fitting, which runs the same endpoint-avoidance test per axis.
bool grid_hits_interior(const Rat& anchor, int level, const Arc& arc);

// The unique level-n interval of the filtration whose half-open cell
// (anchor + k*2^-n, anchor + (k+1)*2^-n] has the arc's start point in
// its closure on the left; when the grid misses the arc's interior this
// cell contains the whole arc.
DyadicInterval enclosing_cell(const Shift& shift, int level, const Rat& point);

}  // namespace dybmo

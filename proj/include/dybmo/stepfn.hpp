#pragma once

#include <functional>
#include <vector>

#include "dybmo/circle.hpp"
#include "dybmo/rational.hpp"

namespace dybmo {

// Exact piecewise-constant function on the circle. Piece i is the arc
// (breakpoints[i], breakpoints[i+1]] (cyclically) with value values[i].
// Stored in canonical form: breakpoints strictly increasing in [0,1),
// cyclically adjacent values distinct; a constant function is the
// single piece (0, 1].
class StepFn {
  public:
    StepFn() : StepFn(constant(Rat(0))) {}
    StepFn(std::vector<Rat> breakpoints, std::vector<Rat> values);

    static StepFn constant(Rat v);

    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const std::vector<Rat>& values() const { return values_; }
    size_t piece_count() const { return values_.size(); }
    bool is_constant() const { return values_.size() == 1; }

    Rat eval(const Rat& t) const;
    Rat min_value() const;
    Rat max_value() const;

    Rat total_integral() const { return prefix_.back(); }
    // Exact integral over an arc, via cached prefix sums. Bit-identical
    // to summing overlap * value piece by piece.
    Rat integral(const Arc& arc) const;

    StepFn abs() const;
    StepFn scaled(const Rat& factor) const;
    StepFn plus_constant(const Rat& c) const;
    StepFn plus(const StepFn& other) const;
    StepFn minus(const StepFn& other) const;

    bool operator==(const StepFn& o) const {
        return breakpoints_ == o.breakpoints_ && values_ == o.values_;
    }

    // Calls cb(overlap_length, value) for every maximal constant stretch
    // of the function inside the arc (in order around the arc).
    void for_each_overlap(const Arc& arc, const std::function<void(const Rat&, const Rat&)>& cb) const;

    // Flat segmentation of the circle cut at 0: K segments
    // (x[j], x[j+1]] with x[0] = 0, x[K] = 1.
    const std::vector<Rat>& flat_bounds() const { return flat_x_; }
    const std::vector<Rat>& flat_values() const { return flat_v_; }

  private:
    std::vector<Rat> breakpoints_;
    std::vector<Rat> values_;
    std::vector<Rat> flat_x_;   // size K+1
    std::vector<Rat> flat_v_;   // size K
    std::vector<Rat> prefix_;   // size K+1; prefix_[j] = integral over (0, x[j]]

    void build_flат() = delete;
    void build_flat();
    Rat prefix_at(const Rat& x) const;
};

}  // namespace dybmo

#include "dybmo/circle.hpp"

#include <stdexcept>
#include <unordered_set>

namespace dybmo {

Arc::Arc(Rat s, Rat len) : start(std::move(s)), length(std::move(len)) {
    if (start < 0 || start >= 1) throw std::invalid_argument("Arc: start must lie in [0,1)");
    if (length <= 0 || length > 1) throw std::invalid_argument("Arc: length must lie in (0,1]");
}

bool Arc::contains_point(const Rat& t) const {
    if (is_full_circle()) return true;
    Rat x = mod_one(t - start);  // position relative to start, in [0,1)
    if (x == 0) return false;    // the start point itself is excluded
    return x <= length;
}

bool Arc::contains_arc(const Arc& other) const {
    if (is_full_circle()) return true;
    Rat x = mod_one(other.start - start);
    return x + other.length <= length;
}

Rat dyadic_distance(const Rat& delta) {
    if (delta < 0 || delta >= 1) throw std::invalid_argument("dyadic_distance: delta must lie in [0,1)");
    const Int q = delta.get_den();
    if (q > Int(1) << 62)
        throw std::invalid_argument("dyadic_distance: denominator too large for exact orbit scan");
    const std::uint64_t den = q.get_ui();
    // Orbit of the numerator under a -> 2a mod q. It repeats after at
    // most q steps; the minimum of min(a, q-a) over one cycle pass is
    // exact. An orbit hitting 0 stays there, so 0 short-circuits.
    std::uint64_t a = delta.get_num().get_ui() % den;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t best = a == 0 ? 0 : std::min(a, den - a);
    while (a != 0 && seen.insert(a).second) {
        a = (a * 2) % den;  // den <= 2^62, no overflow
        best = std::min(best, std::min(a, den - a));
    }
    return make_rat(Int(best), Int(den));
}

Rat pairwise_distance(const std::vector<Rat>& deltas) {
    if (deltas.size() < 2)
        throw std::invalid_argument("pairwise_distance: need at least two shifts");
    bool first = true;
    Rat best;
    for (size_t i = 0; i < deltas.size(); ++i) {
        for (size_t j = i + 1; j < deltas.size(); ++j) {
            Rat d = dyadic_distance(mod_one(deltas[i] - deltas[j]));
            if (first || d < best) {
                best = d;
                first = false;
            }
        }
    }
    return best;
}

Shift::Shift(Rat delta) : delta_(std::move(delta)) {
    if (delta_ < 0 || delta_ >= 1) throw std::invalid_argument("Shift: delta must lie in [0,1)");
    distance_ = dyadic_distance(delta_);
}

DyadicInterval::DyadicInterval(int n, std::int64_t k, Shift s)
    : level(n), index(k), shift(std::move(s)) {
    if (n < 0 || n > 62) throw std::invalid_argument("DyadicInterval: level out of range [0,62]");
    if (k < 0 || k >= (std::int64_t(1) << n))
        throw std::invalid_argument("DyadicInterval: index out of range");
}

DyadicInterval DyadicInterval::parent() const {
    if (level == 0) throw std::logic_error("DyadicInterval: level 0 has no parent");
    return DyadicInterval(level - 1, index / 2, shift);
}

DyadicInterval DyadicInterval::child(int which) const {
    return DyadicInterval(level + 1, 2 * index + which, shift);
}

Arc interval_bounds(const DyadicInterval& d) {
    Rat start = mod_one(d.shift.delta() + Rat(d.index) * pow2(-d.level));
    return Arc(start, pow2(-d.level));
}

const char* to_string(FitFiltration f) {
    return f == FitFiltration::Base ? "base" : "shifted";
}

bool grid_hits_interior(const Rat& anchor, int level, const Arc& arc) {
    if (arc.is_full_circle()) return true;
    // Smallest grid point strictly above arc.start, in unwrapped
    // coordinates; the grid is 2^-n periodic so scanning k over Z is
    // equivalent to scanning the circle.
    Rat step = pow2(-level);
    Rat rel = (arc.start - anchor) / step;
    Int k = rat_floor(rel) + 1;
    Rat point = anchor + Rat(k) * step;
    return point < arc.start + arc.length;
}

DyadicInterval enclosing_cell(const Shift& shift, int level, const Rat& point) {
    Rat step = pow2(-level);
    Int k = rat_floor((point - shift.delta()) / step);
    Int m;
    mpz_fdiv_r_2exp(m.get_mpz_t(), k.get_mpz_t(), static_cast<mp_bitcnt_t>(level));
    return DyadicInterval(level, static_cast<std::int64_t>(m.get_si()), shift);
}

FitResult fit_interval(const Arc& arc, const Shift& shift) {
    if (!shift.admissible())
        throw std::invalid_argument("fit_interval: inadmissible shift: d(delta)=0");
    const Rat d = shift.distance();
    FitResult res;
    if (arc.length >= d) {
        res.filtration = FitFiltration::Base;
        res.interval = DyadicInterval(0, 0, Shift(Rat(0)));
        res.ratio = 1 / arc.length;
        return res;
    }
    // Unique n >= 0 with d*2^-(n+1) <= |I| < d*2^-n.
    int n = 0;
    Rat bound = d / 2;
    while (arc.length < bound) {
        bound /= 2;
        ++n;
        if (n > 62) throw std::logic_error("fit_interval: arc too short for 63-bit levels");
    }
    const bool base_hit = grid_hits_interior(Rat(0), n, arc);
    const bool shifted_hit = grid_hits_interior(shift.delta(), n, arc);
    // Any two points of the combined endpoint set are at least
    // d*2^-n > |I| apart, so both grids cannot meet the interior.
    if (base_hit && shifted_hit)
        throw std::logic_error("fit_interval: both level grids meet the arc interior");
    if (!base_hit) {
        res.filtration = FitFiltration::Base;
        res.interval = enclosing_cell(Shift(Rat(0)), n, arc.start);
    } else {
        res.filtration = FitFiltration::Shifted;
        res.interval = enclosing_cell(shift, n, arc.start);
    }
    res.ratio = pow2(-n) / arc.length;
    return res;
}

}  // namespace dybmo

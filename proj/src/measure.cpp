#include "bdbm/measure.hpp"

#include <algorithm>
#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const Atom& at : atoms_) {
        if (!(at.x > 0.0) || !std::isfinite(at.x))
            fail(Errc::InvalidFellerParams, "atom location must be positive");
        if (!(at.w > 0.0) || !std::isfinite(at.w))
            fail(Errc::InvalidFellerParams, "atom weight must be positive");
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& l, const Atom& r) { return l.x > r.x; });
    // merge duplicates so locations are strictly decreasing
    std::vector<Atom> merged;
    for (const Atom& at : atoms_) {
        if (!merged.empty() && merged.back().x == at.x)
            merged.back().w += at.w;
        else
            merged.push_back(at);
    }
    atoms_ = std::move(merged);
}

AtomicMeasure AtomicMeasure::truncated_infinite(std::vector<Atom> atoms, std::size_t trunc_index,
                                                double tail_bound) {
    AtomicMeasure m(std::move(atoms));
    m.truncated_ = true;
    m.trunc_index_ = trunc_index;
    m.tail_bound_ = tail_bound;
    return m;
}

AtomicMeasure AtomicMeasure::point_mass(double x, double w) {
    return AtomicMeasure(std::vector<Atom>{{x, w}});
}

double AtomicMeasure::total_mass() const {
    double s = 0.0;
    for (const Atom& at : atoms_) s += at.w;
    return s;
}

double AtomicMeasure::integral_min1() const { return integral_min(1.0); }

double AtomicMeasure::integral_min(double c) const {
    double s = 0.0;
    for (const Atom& at : atoms_) s += at.w * std::min(c, at.x);
    return s;
}

double AtomicMeasure::mass_left_open(double lo, double hi) const {
    double s = 0.0;
    for (const Atom& at : atoms_)
        if (at.x > lo && at.x <= hi) s += at.w;
    return s;
}

double AtomicMeasure::mass_open(double lo, double hi) const {
    double s = 0.0;
    for (const Atom& at : atoms_)
        if (at.x > lo && at.x < hi) s += at.w;
    return s;
}

double AtomicMeasure::mass_above(double lo) const {
    double s = 0.0;
    for (const Atom& at : atoms_)
        if (at.x > lo) s += at.w;
    return s;
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
    std::vector<Atom> out = atoms_;
    for (Atom& at : out) at.w *= factor;
    AtomicMeasure m(std::move(out));
    m.truncated_ = truncated_;
    m.trunc_index_ = trunc_index_;
    m.tail_bound_ = tail_bound_ * factor;
    return m;
}

}  // namespace bdbm

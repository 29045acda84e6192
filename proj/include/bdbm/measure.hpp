#pragma once

#include <cstddef>
#include <vector>

namespace bdbm {

struct Atom {
    double x = 0.0;  // location, > 0
    double w = 0.0;  // weight, > 0
};

// Finite list of atoms on (0,inf), canonically ordered by strictly decreasing
// location. A truncated representation of an infinite measure records the
// truncation index and a bound on the dropped (1 ^ x)-mass.
class AtomicMeasure {
  public:
    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<Atom> atoms);

    static AtomicMeasure truncated_infinite(std::vector<Atom> atoms, std::size_t trunc_index,
                                            double tail_bound);
    static AtomicMeasure point_mass(double x, double w = 1.0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    bool truncated_infinite() const { return truncated_; }
    std::size_t truncation_index() const { return trunc_index_; }
    double tail_bound() const { return tail_bound_; }

    double total_mass() const;          // |p4| over stored atoms
    double integral_min1() const;       // integral of (1 ^ x)
    double integral_min(double c) const;  // integral of (c ^ x)

    // sum of w over atoms with lo < x <= hi (half-open on the left)
    double mass_left_open(double lo, double hi) const;
    // sum of w over atoms with lo < x < hi
    double mass_open(double lo, double hi) const;
    double mass_above(double lo) const;  // x > lo

    AtomicMeasure scaled(double factor) const;

  private:
    std::vector<Atom> atoms_;
    bool truncated_ = false;
    std::size_t trunc_index_ = 0;
    double tail_bound_ = 0.0;
};

}  // namespace bdbm

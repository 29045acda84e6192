#pragma once

#include <cstddef>
#include <vector>

#include "bdbm/measure.hpp"
#include "bdbm/scale_speed.hpp"

namespace bdbm {

// Boundary parameters (p1, p2, p3, p4): killing, reflecting, sojourn, jumping.
struct FellerParams {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    AtomicMeasure p4;

    double norm_total() const;  // p1 + p2 + p3 + integral of (1 ^ x) dp4
    FellerParams normalized() const;
    // Checks nonnegativity and the frequent-jump constraint: p2 == p3 == 0
    // forces |p4| truncated-infinite, except for the pure-killing special case.
    void validate() const;
    bool killed_bm_special() const { return p2 == 0.0 && p3 == 0.0 && p4.empty() && p1 > 0.0; }
};

// Weights nu_k attached to chain levels k, canonically sorted by level.
struct LevelMeasure {
    std::vector<std::size_t> levels;
    std::vector<double> weights;
    bool truncated_infinite = false;
    double tail_bound = 0.0;

    bool empty() const { return levels.empty(); }
    double total() const;
    double weight_at(std::size_t level) const;
    AtomicMeasure as_atoms(const StateEmbedding& emb) const;
};

// Boundary triple (gamma, beta, nu) of a chain; `minimal` marks the minimal
// process, which carries no triple.
struct ChainParams {
    double gamma = 0.0;
    double beta = 0.0;
    LevelMeasure nu;
    bool minimal = false;

    // Checks the series condition and the exit-boundary restriction against
    // the given scale/speed data; throws InvalidChainParams.
    void validate(const ScaleSpeed& ss) const;
    ChainParams normalized(const StateEmbedding& emb) const;
};

// Weight allocation of a boundary jump measure onto chain levels: mass in
// (c_hat[n+1], c_hat[n]] splits linearly between levels n and n+1; everything
// above c_hat[0] belongs to level 0.
LevelMeasure allocate_jump_measure(const AtomicMeasure& p4, const StateEmbedding& emb);

// Forward parameter map: gamma = p1, beta = 2 p2, nu = allocation of p4.
// Returns the minimal marker when the image has beta == 0 and |nu| == 0.
ChainParams chain_from_feller(const FellerParams& fp, const StateEmbedding& emb);

// Converse map; validates the triple first. The sojourn weight of the Doob
// image is fixed at one half before normalization (the triple leaves it free).
FellerParams feller_from_chain(const ChainParams& cp, const StateEmbedding& emb,
                               const ScaleSpeed& ss);

}  // namespace bdbm

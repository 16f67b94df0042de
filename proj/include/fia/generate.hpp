#pragma once

#include <cstdint>

#include "fia/decompose.hpp"

namespace fia {

/// Portable deterministic random stream (splitmix64 mixing recurrence).
/// The exact consumption order is part of the file-format contract: fixed
/// seeds must reproduce byte-identical artifacts across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next();
    /// Uniform in [0, 1) with 53 bits.
    double next_unit();
    /// Uniform in [1, bound].
    uint64_t next_magnitude(uint64_t bound);
    bool next_bool() { return (next() & 1u) != 0; }

private:
    uint64_t state_;
};

struct GenConfig {
    uint64_t seed = 0;
    double sparsity = 0.5;       // probability of a nonzero coefficient
    uint64_t coeff_bound = 5;    // values drawn from [-bound, bound] \ {0}
    int order = 2;
    RingSpec ring;
};

AlgElement gen_element(const GenConfig& cfg, const PosetPtr& poset);
InnerData gen_inner(const GenConfig& cfg, const PosetPtr& poset);
TransitiveMap gen_transitive(const GenConfig& cfg, const PosetPtr& poset);

/// hd_mul(hd_inner(gen_inner), tm_tilde(gen_transitive)) drawn from a
/// single stream; always passes hd_check.
HigherDerivation gen_hd(const GenConfig& cfg, const PosetPtr& poset);

// Stream-level variants used to chain several draws off one seed.
AlgElement gen_element_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset);
InnerData gen_inner_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset);
TransitiveMap gen_transitive_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset);

}  // namespace fia

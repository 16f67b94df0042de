#include "fia/generate.hpp"

namespace fia {

uint64_t SplitMix64::next()
{
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t SplitMix64::next_magnitude(uint64_t bound)
{
    return bound <= 1 ? 1 : 1 + next() % bound;
}

namespace {

RingElem draw_coeff(SplitMix64& rng, const GenConfig& cfg, bool force_nonzero)
{
    if (!force_nonzero && rng.next_unit() >= cfg.sparsity)
        return RingElem::zero(cfg.ring);
    Int v(rng.next_magnitude(cfg.coeff_bound));
    if (rng.next_bool())
        v = -v;
    return RingElem(cfg.ring, std::move(v));  // may still reduce to 0 mod m
}

}  // namespace

AlgElement gen_element_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset)
{
    AlgElement e(poset, cfg.ring);
    for (int sid = 0; sid < poset->segment_count(); ++sid)
        e.set_coeff(sid, draw_coeff(rng, cfg, false));
    return e;
}

InnerData gen_inner_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset)
{
    InnerData data{poset, cfg.ring, {}};
    for (int n = 1; n <= cfg.order; ++n)
        data.rho.push_back(gen_element_stream(rng, cfg, poset));
    return data;
}

TransitiveMap gen_transitive_stream(SplitMix64& rng, const GenConfig& cfg, const PosetPtr& poset)
{
    std::vector<std::vector<RingElem>> grading;
    grading.reserve(poset->size());
    for (int x = 0; x < poset->size(); ++x) {
        std::vector<RingElem> g;
        g.push_back(RingElem::one(cfg.ring));
        for (int n = 1; n <= cfg.order; ++n)
            g.push_back(draw_coeff(rng, cfg, false));
        grading.push_back(std::move(g));
    }
    return tm_from_grading(poset, cfg.ring, grading, cfg.order);
}

AlgElement gen_element(const GenConfig& cfg, const PosetPtr& poset)
{
    SplitMix64 rng(cfg.seed);
    return gen_element_stream(rng, cfg, poset);
}

InnerData gen_inner(const GenConfig& cfg, const PosetPtr& poset)
{
    SplitMix64 rng(cfg.seed);
    return gen_inner_stream(rng, cfg, poset);
}

TransitiveMap gen_transitive(const GenConfig& cfg, const PosetPtr& poset)
{
    SplitMix64 rng(cfg.seed);
    return gen_transitive_stream(rng, cfg, poset);
}

HigherDerivation gen_hd(const GenConfig& cfg, const PosetPtr& poset)
{
    SplitMix64 rng(cfg.seed);
    InnerData rho = gen_inner_stream(rng, cfg, poset);
    TransitiveMap sigma = gen_transitive_stream(rng, cfg, poset);
    return hd_mul(hd_inner(rho), tm_tilde(sigma));
}

}  // namespace fia

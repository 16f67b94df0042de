#pragma once

#include <vector>

#include "fia/linmap.hpp"

namespace fia {

/// Order-N-truncated higher derivation candidate: a sequence d_0 .. d_N of
/// linear maps with d_0 = id. Whether the Leibniz condition actually holds
/// is checked by hd_check, not enforced by the container.
class HigherDerivation {
public:
    /// Constructs the *-identity of the given order.
    HigherDerivation(PosetPtr poset, const RingSpec& spec, int order);

    const PosetPtr& poset() const { return poset_; }
    const RingSpec& spec() const { return spec_; }
    int order() const { return static_cast<int>(maps_.size()) - 1; }

    const LinMap& component(int n) const { return maps_.at(n); }
    void set_component(int n, LinMap f);  // n >= 1

    bool operator==(const HigherDerivation& other) const
    {
        return spec_ == other.spec_ && maps_ == other.maps_;
    }

    void require_compatible(const HigherDerivation& other) const;

private:
    PosetPtr poset_;
    RingSpec spec_;
    std::vector<LinMap> maps_;
};

/// Sequence r_1 .. r_N of algebra elements feeding the inner construction.
struct InnerData {
    PosetPtr poset;
    RingSpec spec;
    std::vector<AlgElement> rho;  // rho[n-1] = r_n

    int order() const { return static_cast<int>(rho.size()); }
    static InnerData zeros(PosetPtr poset, const RingSpec& spec, int order);
};

struct LeibnizViolation {
    int n;
    int seg_a;
    int seg_b;
};

struct HdCheckReport {
    bool ok = true;
    std::vector<LeibnizViolation> violations;
};

/// Verifies d_n(e_a e_b) = sum_{i+j=n} d_i(e_a) d_j(e_b) over all basis
/// pairs and 1 <= n <= N; sufficient by bilinearity of both sides.
HdCheckReport hd_check(const HigherDerivation& d);

HigherDerivation hd_identity(PosetPtr poset, const RingSpec& spec, int order);
HigherDerivation hd_mul(const HigherDerivation& a, const HigherDerivation& b);
HigherDerivation hd_inverse(const HigherDerivation& d);
HigherDerivation hd_truncate(const HigherDerivation& d, int order);

/// The generator [r,k]: component n is zero unless k | n, and for n = k*l
/// maps x to r^l x - r^{l-1} x r.
HigherDerivation hd_bracket(const AlgElement& r, int k, int order);

/// Inner higher derivation: component n of [r_1,1]*...*[r_n,n].
HigherDerivation hd_inner(const InnerData& data);

/// ([r_1,1]*...*[r_k,k])^{-1} * d, the full truncated sequence.
HigherDerivation hd_residual_partial(const HigherDerivation& d, const InnerData& data, int k);

/// The residual with components d^{(r)}_n = d^{(r,n)}_n; satisfies
/// d = hd_mul(hd_inner(data), hd_residual(d, data)).
HigherDerivation hd_residual(const HigherDerivation& d, const InnerData& data);

/// Over Q: d_n = (1/n!) d1^n for an ordinary derivation d1.
HigherDerivation hd_exp_derivation(const LinMap& d1, int order);

/// Ordinary Leibniz check for a single map, on basis pairs.
bool is_derivation(const LinMap& f);

}  // namespace fia

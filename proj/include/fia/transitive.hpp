#pragma once

#include <optional>

#include "fia/higher.hpp"

namespace fia {

/// Higher transitive map truncated at order N: scalars sigma_n(x,y) for
/// 1 <= n <= N indexed by segments, with sigma_0 implicitly 1 everywhere.
/// Missing entries mean zero.
class TransitiveMap {
public:
    TransitiveMap(PosetPtr poset, const RingSpec& spec, int order);

    const PosetPtr& poset() const { return poset_; }
    const RingSpec& spec() const { return spec_; }
    int order() const { return static_cast<int>(values_.size()); }

    RingElem value(int n, int sid) const;
    void set_value(int n, int sid, RingElem v);
    const std::map<int, RingElem>& row(int n) const { return values_.at(n - 1); }

    bool operator==(const TransitiveMap& other) const
    {
        return spec_ == other.spec_ && values_ == other.values_;
    }

private:
    PosetPtr poset_;
    RingSpec spec_;
    std::vector<std::map<int, RingElem>> values_;  // values_[n-1]
};

struct TmViolation {
    int n;
    int seg;        // segment (x,y) whose identity fails
    int mid;        // intermediate z (element index), or x itself for the diagonal check
};

struct TmCheckReport {
    bool ok = true;
    std::vector<TmViolation> violations;
};

/// Checks sigma_n(x,y) = sum_{i+j=n} sigma_i(x,z) sigma_j(z,y) for every
/// chain x <= z <= y, plus the implied diagonal vanishing sigma_n(x,x) = 0.
TmCheckReport tm_check(const TransitiveMap& sigma);

/// The induced diagonal higher derivation with basis images
/// sigma_n(x,y) e_{xy}. Requires tm_check to pass.
HigherDerivation tm_tilde(const TransitiveMap& sigma);

/// Same construction without the validity gate; used where the caller
/// wants to evaluate the reconstruction of a possibly-invalid sigma.
HigherDerivation tm_tilde_unchecked(const TransitiveMap& sigma);

struct IdempotentWitness {
    int n;
    int element;  // x with d_n(e_x) != 0
};

std::optional<IdempotentWitness> find_nonannihilated_idempotent(const HigherDerivation& d);
bool hd_annihilates_idempotents(const HigherDerivation& d);

/// Reads sigma_n(x,y) = d_n(e_{xy})_{xy} from a higher derivation whose
/// components kill every e_x; throws with a witness otherwise.
TransitiveMap tm_extract(const HigherDerivation& d);

// Truncated unit series helpers (coefficient vectors of length order+1,
// index 0 the constant term).
std::vector<RingElem> series_mul(const std::vector<RingElem>& a, const std::vector<RingElem>& b);
std::vector<RingElem> series_inverse(const std::vector<RingElem>& a);  // a[0] must be 1

/// Multiplicative generator of transitive maps: sigma_n(x,y) is the n-th
/// coefficient of g(x)^{-1} g(y), where g assigns each element a unit
/// series (constant term 1, length order+1).
TransitiveMap tm_from_grading(PosetPtr poset, const RingSpec& spec,
                              const std::vector<std::vector<RingElem>>& grading, int order);

}  // namespace fia

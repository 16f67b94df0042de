#pragma once

#include <map>
#include <set>
#include <string>

#include "fia/poset.hpp"
#include "fia/ring.hpp"

namespace fia {

/// Element of the incidence algebra I(P,R): a sparse map from segment ids
/// to nonzero scalars. Zero coefficients are never stored, so equality is
/// map equality.
class AlgElement {
public:
    AlgElement(PosetPtr poset, RingSpec spec) : poset_(std::move(poset)), spec_(std::move(spec)) {}

    static AlgElement zero(PosetPtr poset, RingSpec spec);
    static AlgElement e_segment(PosetPtr poset, const RingSpec& spec, int x, int y);
    static AlgElement e_element(PosetPtr poset, const RingSpec& spec, int x);
    static AlgElement delta(PosetPtr poset, const RingSpec& spec);
    static AlgElement e_subset(PosetPtr poset, const RingSpec& spec, const std::set<int>& xs);

    const PosetPtr& poset() const { return poset_; }
    const RingSpec& spec() const { return spec_; }
    bool is_zero() const { return coeffs_.empty(); }

    RingElem coeff(int sid) const;
    RingElem coeff(int x, int y) const { return coeff(poset_->segment_id(x, y)); }
    void set_coeff(int sid, RingElem v);  // drops v when zero
    void add_coeff(int sid, const RingElem& v);
    const std::map<int, RingElem>& coeffs() const { return coeffs_; }

    AlgElement operator+(const AlgElement& other) const;
    AlgElement operator-(const AlgElement& other) const;
    AlgElement operator-() const;
    AlgElement operator*(const AlgElement& other) const;  // convolution
    AlgElement scale(const RingElem& c) const;

    AlgElement power(int l) const;  // l >= 0, power(0) = delta

    bool operator==(const AlgElement& other) const
    {
        return spec_ == other.spec_ && coeffs_ == other.coeffs_;
    }

    std::string str() const;

    void require_compatible(const AlgElement& other) const;

private:
    PosetPtr poset_;
    RingSpec spec_;
    std::map<int, RingElem> coeffs_;
};

}  // namespace fia

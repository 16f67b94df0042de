#pragma once

#include "fia/algebra.hpp"

namespace fia {

/// R-linear endomorphism of I(P,R), stored by its action on the segment
/// basis. A missing basis image means zero, so equality is map equality.
class LinMap {
public:
    LinMap(PosetPtr poset, RingSpec spec) : poset_(std::move(poset)), spec_(std::move(spec)) {}

    static LinMap zero(PosetPtr poset, RingSpec spec);
    static LinMap identity(PosetPtr poset, const RingSpec& spec);
    static LinMap ad(const AlgElement& r);  // x -> rx - xr

    const PosetPtr& poset() const { return poset_; }
    const RingSpec& spec() const { return spec_; }

    AlgElement image(int sid) const;
    void set_image(int sid, AlgElement img);  // drops zero images
    const std::map<int, AlgElement>& images() const { return images_; }

    AlgElement apply(const AlgElement& a) const;

    LinMap operator+(const LinMap& other) const;
    LinMap operator-(const LinMap& other) const;
    LinMap operator-() const;
    LinMap scale(const RingElem& c) const;
    LinMap compose(const LinMap& other) const;  // this after other

    bool is_zero() const { return images_.empty(); }
    bool operator==(const LinMap& other) const
    {
        return spec_ == other.spec_ && images_ == other.images_;
    }

    void require_compatible(const LinMap& other) const;

private:
    PosetPtr poset_;
    RingSpec spec_;
    std::map<int, AlgElement> images_;
};

}  // namespace fia

#include "fia/linmap.hpp"

namespace fia {

LinMap LinMap::zero(PosetPtr poset, RingSpec spec)
{
    return LinMap(std::move(poset), std::move(spec));
}

LinMap LinMap::identity(PosetPtr poset, const RingSpec& spec)
{
    LinMap f(poset, spec);
    for (int sid = 0; sid < poset->segment_count(); ++sid) {
        auto [x, y] = poset->segments()[sid];
        f.set_image(sid, AlgElement::e_segment(poset, spec, x, y));
    }
    return f;
}

LinMap LinMap::ad(const AlgElement& r)
{
    LinMap f(r.poset(), r.spec());
    for (int sid = 0; sid < r.poset()->segment_count(); ++sid) {
        auto [x, y] = r.poset()->segments()[sid];
        AlgElement e = AlgElement::e_segment(r.poset(), r.spec(), x, y);
        f.set_image(sid, r * e - e * r);
    }
    return f;
}

AlgElement LinMap::image(int sid) const
{
    auto it = images_.find(sid);
    return it == images_.end() ? AlgElement::zero(poset_, spec_) : it->second;
}

void LinMap::set_image(int sid, AlgElement img)
{
    if (sid < 0 || sid >= poset_->segment_count())
        throw Error("segment id out of range");
    if (img.is_zero())
        images_.erase(sid);
    else
        images_.insert_or_assign(sid, std::move(img));
}

AlgElement LinMap::apply(const AlgElement& a) const
{
    if (a.poset().get() != poset_.get() || !(a.spec() == spec_))
        throw Error("algebra mismatch in LinMap::apply");
    AlgElement r = AlgElement::zero(poset_, spec_);
    for (const auto& [sid, c] : a.coeffs()) {
        auto it = images_.find(sid);
        if (it != images_.end())
            r = r + it->second.scale(c);
    }
    return r;
}

void LinMap::require_compatible(const LinMap& other) const
{
    if (poset_.get() != other.poset_.get() || !(spec_ == other.spec_))
        throw Error("algebra mismatch between linear maps");
}

LinMap LinMap::operator+(const LinMap& other) const
{
    require_compatible(other);
    LinMap r = *this;
    for (const auto& [sid, img] : other.images_)
        r.set_image(sid, r.image(sid) + img);
    return r;
}

LinMap LinMap::operator-(const LinMap& other) const
{
    return *this + (-other);
}

LinMap LinMap::operator-() const
{
    LinMap r(poset_, spec_);
    for (const auto& [sid, img] : images_)
        r.set_image(sid, -img);
    return r;
}

LinMap LinMap::scale(const RingElem& c) const
{
    LinMap r(poset_, spec_);
    for (const auto& [sid, img] : images_)
        r.set_image(sid, img.scale(c));
    return r;
}

LinMap LinMap::compose(const LinMap& other) const
{
    require_compatible(other);
    LinMap r(poset_, spec_);
    for (const auto& [sid, img] : other.images_)
        r.set_image(sid, apply(img));
    return r;
}

}  // namespace fia

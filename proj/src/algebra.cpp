#include "fia/algebra.hpp"

namespace fia {

AlgElement AlgElement::zero(PosetPtr poset, RingSpec spec)
{
    return AlgElement(std::move(poset), std::move(spec));
}

AlgElement AlgElement::e_segment(PosetPtr poset, const RingSpec& spec, int x, int y)
{
    AlgElement e(poset, spec);
    e.set_coeff(poset->segment_id(x, y), RingElem::one(spec));
    return e;
}

AlgElement AlgElement::e_element(PosetPtr poset, const RingSpec& spec, int x)
{
    return e_segment(std::move(poset), spec, x, x);
}

AlgElement AlgElement::delta(PosetPtr poset, const RingSpec& spec)
{
    AlgElement e(poset, spec);
    for (int x = 0; x < poset->size(); ++x)
        e.set_coeff(poset->segment_id(x, x), RingElem::one(spec));
    return e;
}

AlgElement AlgElement::e_subset(PosetPtr poset, const RingSpec& spec, const std::set<int>& xs)
{
    AlgElement e(poset, spec);
    for (int x : xs) {
        if (x < 0 || x >= poset->size())
            throw Error("subset member out of range");
        e.set_coeff(poset->segment_id(x, x), RingElem::one(spec));
    }
    return e;
}

RingElem AlgElement::coeff(int sid) const
{
    auto it = coeffs_.find(sid);
    return it == coeffs_.end() ? RingElem::zero(spec_) : it->second;
}

void AlgElement::set_coeff(int sid, RingElem v)
{
    if (sid < 0 || sid >= poset_->segment_count())
        throw Error("segment id out of range");
    if (v.is_zero())
        coeffs_.erase(sid);
    else
        coeffs_.insert_or_assign(sid, std::move(v));
}

void AlgElement::add_coeff(int sid, const RingElem& v)
{
    auto it = coeffs_.find(sid);
    if (it == coeffs_.end()) {
        if (!v.is_zero())
            coeffs_.emplace(sid, v);
        return;
    }
    RingElem s = it->second + v;
    if (s.is_zero())
        coeffs_.erase(it);
    else
        it->second = std::move(s);
}

void AlgElement::require_compatible(const AlgElement& other) const
{
    if (poset_.get() != other.poset_.get())
        throw Error("poset mismatch between algebra elements");
    if (!(spec_ == other.spec_))
        throw Error("ring spec mismatch between algebra elements");
}

AlgElement AlgElement::operator+(const AlgElement& other) const
{
    require_compatible(other);
    AlgElement r = *this;
    for (const auto& [sid, v] : other.coeffs_)
        r.add_coeff(sid, v);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& other) const
{
    return *this + (-other);
}

AlgElement AlgElement::operator-() const
{
    AlgElement r(poset_, spec_);
    for (const auto& [sid, v] : coeffs_)
        r.coeffs_.emplace(sid, -v);
    return r;
}

AlgElement AlgElement::scale(const RingElem& c) const
{
    AlgElement r(poset_, spec_);
    for (const auto& [sid, v] : coeffs_)
        r.add_coeff(sid, c * v);
    return r;
}

AlgElement AlgElement::operator*(const AlgElement& other) const
{
    require_compatible(other);
    AlgElement r(poset_, spec_);
    const auto& segs = poset_->segments();
    for (const auto& [sa, va] : coeffs_) {
        auto [x, z] = segs[sa];
        for (const auto& [sb, vb] : other.coeffs_) {
            auto [z2, y] = segs[sb];
            if (z2 != z)
                continue;
            r.add_coeff(poset_->segment_id(x, y), va * vb);
        }
    }
    return r;
}

AlgElement AlgElement::power(int l) const
{
    if (l < 0)
        throw Error("negative power");
    AlgElement r = delta(poset_, spec_);
    for (int i = 0; i < l; ++i)
        r = r * *this;
    return r;
}

std::string AlgElement::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (const auto& [sid, v] : coeffs_) {
        if (!s.empty())
            s += " + ";
        s += v.str() + "*e[" + poset_->segment_label(sid) + "]";
    }
    return s;
}

}  // namespace fia

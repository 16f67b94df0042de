#include "fia/higher.hpp"

namespace fia {

HigherDerivation::HigherDerivation(PosetPtr poset, const RingSpec& spec, int order)
    : poset_(std::move(poset)), spec_(spec)
{
    if (order < 0)
        throw Error("negative order");
    maps_.reserve(order + 1);
    maps_.push_back(LinMap::identity(poset_, spec_));
    for (int n = 1; n <= order; ++n)
        maps_.push_back(LinMap::zero(poset_, spec_));
}

void HigherDerivation::set_component(int n, LinMap f)
{
    if (n < 1 || n > order())
        throw Error("component index out of range");
    f.require_compatible(maps_[0]);
    maps_[n] = std::move(f);
}

void HigherDerivation::require_compatible(const HigherDerivation& other) const
{
    if (poset_.get() != other.poset_.get() || !(spec_ == other.spec_))
        throw Error("algebra mismatch between higher derivations");
    if (order() != other.order())
        throw Error("order mismatch between higher derivations");
}

HdCheckReport hd_check(const HigherDerivation& d)
{
    HdCheckReport rep;
    const auto& P = d.poset();
    const auto& segs = P->segments();
    const int S = P->segment_count();
    for (int n = 1; n <= d.order(); ++n) {
        for (int sa = 0; sa < S; ++sa) {
            auto [u, v] = segs[sa];
            AlgElement ea = AlgElement::e_segment(P, d.spec(), u, v);
            for (int sb = 0; sb < S; ++sb) {
                auto [s, t] = segs[sb];
                AlgElement eb = AlgElement::e_segment(P, d.spec(), s, t);
                AlgElement lhs = v == s
                    ? d.component(n).image(P->segment_id(u, t))
                    : AlgElement::zero(P, d.spec());
                AlgElement rhs = AlgElement::zero(P, d.spec());
                for (int i = 0; i <= n; ++i)
                    rhs = rhs + d.component(i).apply(ea) * d.component(n - i).apply(eb);
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.violations.push_back({n, sa, sb});
                }
            }
        }
    }
    return rep;
}

HigherDerivation hd_identity(PosetPtr poset, const RingSpec& spec, int order)
{
    return HigherDerivation(std::move(poset), spec, order);
}

HigherDerivation hd_mul(const HigherDerivation& a, const HigherDerivation& b)
{
    a.require_compatible(b);
    HigherDerivation r(a.poset(), a.spec(), a.order());
    for (int n = 1; n <= a.order(); ++n) {
        LinMap c = LinMap::zero(a.poset(), a.spec());
        for (int i = 0; i <= n; ++i)
            c = c + a.component(i).compose(b.component(n - i));
        r.set_component(n, std::move(c));
    }
    return r;
}

HigherDerivation hd_inverse(const HigherDerivation& d)
{
    // inv_0 = id, inv_n = -sum_{i=1}^{n} d_i o inv_{n-i}
    HigherDerivation inv(d.poset(), d.spec(), d.order());
    for (int n = 1; n <= d.order(); ++n) {
        LinMap acc = LinMap::zero(d.poset(), d.spec());
        for (int i = 1; i <= n; ++i)
            acc = acc + d.component(i).compose(inv.component(n - i));
        inv.set_component(n, -acc);
    }
    return inv;
}

HigherDerivation hd_truncate(const HigherDerivation& d, int order)
{
    if (order < 0 || order > d.order())
        throw Error("truncation order out of range");
    HigherDerivation r(d.poset(), d.spec(), order);
    for (int n = 1; n <= order; ++n)
        r.set_component(n, d.component(n));
    return r;
}

HigherDerivation hd_bracket(const AlgElement& r, int k, int order)
{
    if (k < 1)
        throw Error("bracket index k must be >= 1");
    HigherDerivation b(r.poset(), r.spec(), order);
    const auto& P = r.poset();
    for (int n = k; n <= order; n += k) {
        const int l = n / k;
        AlgElement rl = r.power(l);
        AlgElement rl1 = r.power(l - 1);
        LinMap f(P, r.spec());
        for (int sid = 0; sid < P->segment_count(); ++sid) {
            auto [x, y] = P->segments()[sid];
            AlgElement e = AlgElement::e_segment(P, r.spec(), x, y);
            f.set_image(sid, rl * e - rl1 * e * r);
        }
        b.set_component(n, std::move(f));
    }
    return b;
}

HigherDerivation hd_inner(const InnerData& data)
{
    const int N = data.order();
    HigherDerivation prod = hd_identity(data.poset, data.spec, N);
    for (int k = 1; k <= N; ++k)
        prod = hd_mul(prod, hd_bracket(data.rho[k - 1], k, N));
    // ([r_1,1]*...*[r_N,N])_n = ([r_1,1]*...*[r_n,n])_n for n <= N, so the
    // truncated full product already carries every component of Delta_r.
    return prod;
}

InnerData InnerData::zeros(PosetPtr poset, const RingSpec& spec, int order)
{
    InnerData d{poset, spec, {}};
    for (int n = 1; n <= order; ++n)
        d.rho.push_back(AlgElement::zero(poset, spec));
    return d;
}

HigherDerivation hd_residual_partial(const HigherDerivation& d, const InnerData& data, int k)
{
    if (k < 0 || k > d.order())
        throw Error("partial residual index out of range");
    const int N = d.order();
    HigherDerivation prod = hd_identity(d.poset(), d.spec(), N);
    for (int i = 1; i <= k; ++i)
        prod = hd_mul(prod, hd_bracket(data.rho[i - 1], i, N));
    return hd_mul(hd_inverse(prod), d);
}

HigherDerivation hd_residual(const HigherDerivation& d, const InnerData& data)
{
    if (data.order() < d.order())
        throw Error("inner data does not cover every order");
    if (data.poset.get() != d.poset().get() || !(data.spec == d.spec()))
        throw Error("algebra mismatch between derivation and inner data");
    return hd_residual_partial(d, data, d.order());
}

bool is_derivation(const LinMap& f)
{
    const auto& P = f.poset();
    const auto& segs = P->segments();
    for (int sa = 0; sa < P->segment_count(); ++sa) {
        auto [u, v] = segs[sa];
        AlgElement ea = AlgElement::e_segment(P, f.spec(), u, v);
        for (int sb = 0; sb < P->segment_count(); ++sb) {
            auto [s, t] = segs[sb];
            AlgElement eb = AlgElement::e_segment(P, f.spec(), s, t);
            AlgElement lhs = f.apply(ea * eb);
            AlgElement rhs = f.apply(ea) * eb + ea * f.apply(eb);
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

HigherDerivation hd_exp_derivation(const LinMap& d1, int order)
{
    if (d1.spec().kind() != RingKind::Rationals)
        throw Error("exp construction requires the rational coefficient ring");
    if (!is_derivation(d1))
        throw Error("map is not an ordinary derivation");
    HigherDerivation d(d1.poset(), d1.spec(), order);
    LinMap pw = d1;  // d1^n
    Int fact = 1;
    for (int n = 1; n <= order; ++n) {
        fact *= n;
        LinMap comp(d1.poset(), d1.spec());
        for (const auto& [sid, img] : pw.images()) {
            AlgElement scaled = AlgElement::zero(d1.poset(), d1.spec());
            for (const auto& [s2, c] : img.coeffs())
                scaled.set_coeff(s2, c.div_int(fact));
            comp.set_image(sid, std::move(scaled));
        }
        d.set_component(n, std::move(comp));
        if (n < order)
            pw = d1.compose(pw);
    }
    return d;
}

}  // namespace fia

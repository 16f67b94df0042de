#include "fia/transitive.hpp"

namespace fia {

TransitiveMap::TransitiveMap(PosetPtr poset, const RingSpec& spec, int order)
    : poset_(std::move(poset)), spec_(spec)
{
    if (order < 0)
        throw Error("negative order");
    values_.resize(order);
}

RingElem TransitiveMap::value(int n, int sid) const
{
    if (n == 0)
        return RingElem::one(spec_);
    const auto& row = values_.at(n - 1);
    auto it = row.find(sid);
    return it == row.end() ? RingElem::zero(spec_) : it->second;
}

void TransitiveMap::set_value(int n, int sid, RingElem v)
{
    if (n < 1 || n > order())
        throw Error("transitive map order index out of range");
    if (sid < 0 || sid >= poset_->segment_count())
        throw Error("segment id out of range");
    if (v.is_zero())
        values_[n - 1].erase(sid);
    else
        values_[n - 1].insert_or_assign(sid, std::move(v));
}

TmCheckReport tm_check(const TransitiveMap& sigma)
{
    TmCheckReport rep;
    const auto& P = sigma.poset();
    for (int n = 1; n <= sigma.order(); ++n) {
        for (int sid = 0; sid < P->segment_count(); ++sid) {
            auto [x, y] = P->segments()[sid];
            if (x == y && !sigma.value(n, sid).is_zero()) {
                rep.ok = false;
                rep.violations.push_back({n, sid, x});
                continue;
            }
            for (int z : P->interval(sid)) {
                const int xz = P->segment_id(x, z);
                const int zy = P->segment_id(z, y);
                RingElem sum = RingElem::zero(sigma.spec());
                for (int i = 0; i <= n; ++i)
                    sum = sum + sigma.value(i, xz) * sigma.value(n - i, zy);
                if (!(sum == sigma.value(n, sid))) {
                    rep.ok = false;
                    rep.violations.push_back({n, sid, z});
                }
            }
        }
    }
    return rep;
}

HigherDerivation tm_tilde(const TransitiveMap& sigma)
{
    if (!tm_check(sigma).ok)
        throw Error("tm_tilde on an invalid transitive map");
    return tm_tilde_unchecked(sigma);
}

HigherDerivation tm_tilde_unchecked(const TransitiveMap& sigma)
{
    const auto& P = sigma.poset();
    HigherDerivation d(P, sigma.spec(), sigma.order());
    for (int n = 1; n <= sigma.order(); ++n) {
        LinMap f(P, sigma.spec());
        for (const auto& [sid, v] : sigma.row(n)) {
            AlgElement img = AlgElement::zero(P, sigma.spec());
            img.set_coeff(sid, v);
            f.set_image(sid, std::move(img));
        }
        d.set_component(n, std::move(f));
    }
    return d;
}

std::optional<IdempotentWitness> find_nonannihilated_idempotent(const HigherDerivation& d)
{
    const auto& P = d.poset();
    for (int n = 1; n <= d.order(); ++n)
        for (int x = 0; x < P->size(); ++x)
            if (!d.component(n).image(P->segment_id(x, x)).is_zero())
                return IdempotentWitness{n, x};
    return std::nullopt;
}

bool hd_annihilates_idempotents(const HigherDerivation& d)
{
    return !find_nonannihilated_idempotent(d).has_value();
}

TransitiveMap tm_extract(const HigherDerivation& d)
{
    if (auto w = find_nonannihilated_idempotent(d))
        throw Error("d_" + std::to_string(w->n) + "(e_" + d.poset()->label(w->element) +
                    ") != 0: not induced by a transitive map");
    const auto& P = d.poset();
    TransitiveMap sigma(P, d.spec(), d.order());
    for (int n = 1; n <= d.order(); ++n)
        for (int sid = 0; sid < P->segment_count(); ++sid)
            sigma.set_value(n, sid, d.component(n).image(sid).coeff(sid));
    return sigma;
}

std::vector<RingElem> series_mul(const std::vector<RingElem>& a, const std::vector<RingElem>& b)
{
    if (a.size() != b.size() || a.empty())
        throw Error("series length mismatch");
    const size_t len = a.size();
    std::vector<RingElem> r(len, RingElem::zero(a[0].spec()));
    for (size_t i = 0; i < len; ++i)
        for (size_t j = 0; i + j < len; ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

std::vector<RingElem> series_inverse(const std::vector<RingElem>& a)
{
    if (a.empty() || !a[0].is_one())
        throw Error("series inverse requires constant term 1");
    std::vector<RingElem> b(a.size(), RingElem::zero(a[0].spec()));
    b[0] = RingElem::one(a[0].spec());
    for (size_t n = 1; n < a.size(); ++n) {
        RingElem acc = RingElem::zero(a[0].spec());
        for (size_t k = 1; k <= n; ++k)
            acc = acc + a[k] * b[n - k];
        b[n] = -acc;
    }
    return b;
}

TransitiveMap tm_from_grading(PosetPtr poset, const RingSpec& spec,
                              const std::vector<std::vector<RingElem>>& grading, int order)
{
    if (static_cast<int>(grading.size()) != poset->size())
        throw Error("grading must assign one series per element");
    for (const auto& g : grading) {
        if (static_cast<int>(g.size()) != order + 1)
            throw Error("grading series length must be order + 1");
        if (!g[0].is_one())
            throw Error("grading series must have constant term 1");
    }
    std::vector<std::vector<RingElem>> inv;
    inv.reserve(grading.size());
    for (const auto& g : grading)
        inv.push_back(series_inverse(g));

    TransitiveMap sigma(poset, spec, order);
    for (int sid = 0; sid < poset->segment_count(); ++sid) {
        auto [x, y] = poset->segments()[sid];
        std::vector<RingElem> s = series_mul(inv[x], grading[y]);
        for (int n = 1; n <= order; ++n)
            sigma.set_value(n, sid, s[n]);
    }
    return sigma;
}

}  // namespace fia

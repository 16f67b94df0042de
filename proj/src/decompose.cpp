#include "fia/decompose.hpp"

#include <set>

namespace fia {

InnerData compute_rho(const HigherDerivation& d, DecomposeTrace* trace)
{
    const int N = d.order();
    const auto& P = d.poset();
    if (!hd_check(d).ok)
        throw Error("input fails the Leibniz condition; not a higher derivation");
    InnerData rho{P, d.spec(), {}};

    // Inverse of [rho_1,1]*...*[rho_n,n], grown one factor per stage.
    HigherDerivation invprod = hd_identity(P, d.spec(), N);
    HigherDerivation resid = d;
    if (trace)
        trace->stage_residuals.push_back(resid);

    for (int n = 1; n <= N; ++n) {
        AlgElement r_n = AlgElement::zero(P, d.spec());
        for (int sid = 0; sid < P->segment_count(); ++sid) {
            auto [x, y] = P->segments()[sid];
            RingElem c = resid.component(n).image(P->segment_id(y, y)).coeff(sid);
            if (x == y) {
                if (!c.is_zero())
                    throw Error("rho_" + std::to_string(n) + " has nonzero diagonal at " +
                                P->segment_label(sid));
                continue;
            }
            r_n.set_coeff(sid, std::move(c));
        }
        rho.rho.push_back(r_n);

        invprod = hd_mul(hd_inverse(hd_bracket(r_n, n, N)), invprod);
        resid = hd_mul(invprod, d);
        if (trace)
            trace->stage_residuals.push_back(resid);
    }
    return rho;
}

VerifyResult verify(const HigherDerivation& d, const InnerData& rho, const TransitiveMap& sigma)
{
    HigherDerivation recon = hd_mul(hd_inner(rho), tm_tilde_unchecked(sigma));
    d.require_compatible(recon);
    for (int n = 1; n <= d.order(); ++n)
        for (int sid = 0; sid < d.poset()->segment_count(); ++sid)
            if (!(d.component(n).image(sid) == recon.component(n).image(sid)))
                return {false, n, sid};
    return {};
}

Decomposition decompose(const HigherDerivation& d, DecomposeTrace* trace)
{
    InnerData rho = compute_rho(d, trace);
    HigherDerivation resid = hd_residual(d, rho);
    if (auto w = find_nonannihilated_idempotent(resid))
        throw Error("residual does not annihilate e_" + d.poset()->label(w->element) +
                    " at order " + std::to_string(w->n));
    TransitiveMap sigma = tm_extract(resid);
    TmCheckReport tm = tm_check(sigma);
    if (!tm.ok)
        throw Error("extracted sigma fails the transitive-map conditions");
    VerifyResult v = verify(d, rho, sigma);
    if (!v.ok)
        throw Error("reconstruction mismatch at component " + std::to_string(v.n) +
                    ", segment " + d.poset()->segment_label(v.seg));
    return {std::move(rho), std::move(sigma)};
}

Lemma2Report lemma2_probe(const HigherDerivation& d, const std::vector<int>& X, int N)
{
    if (N < 1 || N > d.order())
        throw Error("probe order out of range");
    const auto& P = d.poset();
    for (int n = 1; n < N; ++n)
        for (int x = 0; x < P->size(); ++x)
            if (!d.component(n).image(P->segment_id(x, x)).is_zero())
                throw Error("probe precondition fails: d_" + std::to_string(n) + "(e_" +
                            P->label(x) + ") != 0");

    const RingSpec& spec = d.spec();
    std::set<int> xs(X.begin(), X.end());
    AlgElement eX = AlgElement::e_subset(P, spec, xs);
    AlgElement dNeX = d.component(N).apply(eX);
    const auto& dN = d.component(N);

    auto fail = [](std::string s) { return Lemma2Report{false, std::move(s)}; };

    for (int x : X) {
        AlgElement ex = AlgElement::e_element(P, spec, x);
        AlgElement dNex = dN.image(P->segment_id(x, x));
        if (!(dNex == ex * dNeX + dNex * eX))
            return fail("d_N(e_x) != e_x d_N(e_X) + d_N(e_x) e_X for x = " + P->label(x));
    }
    for (int sid = 0; sid < P->segment_count(); ++sid) {
        auto [x, y] = P->segments()[sid];
        if (x == y)
            continue;
        const bool xin = xs.count(x) > 0;
        const bool yin = xs.count(y) > 0;
        if (xin && !yin) {
            RingElem lhs = dNeX.coeff(sid);
            RingElem rhs = dN.image(P->segment_id(x, x)).coeff(sid);
            if (!(lhs == rhs))
                return fail("d_N(e_X)_{xy} != d_N(e_x)_{xy} at " + P->segment_label(sid));
        }
        if (xin && yin && !dNeX.coeff(sid).is_zero())
            return fail("d_N(e_X)_{xy} != 0 at " + P->segment_label(sid));
        // Corollary: antisymmetry, independent of X.
        RingElem a = dN.image(P->segment_id(x, x)).coeff(sid);
        RingElem b = dN.image(P->segment_id(y, y)).coeff(sid);
        if (!(a == -b))
            return fail("d_N(e_x)_{xy} != -d_N(e_y)_{xy} at " + P->segment_label(sid));
    }
    return {};
}

}  // namespace fia

#pragma once

#include "fia/transitive.hpp"

namespace fia {

struct Decomposition {
    InnerData rho;
    TransitiveMap sigma;
};

/// Residuals kept around by decompose for inspection: stage_residual[n] is
/// ([rho_1,1]*...*[rho_n,n])^{-1} * d, for n = 0..N.
struct DecomposeTrace {
    std::vector<HigherDerivation> stage_residuals;
};

/// The rho-recursion: (rho_n)_{xy} is the (x,y) coefficient of the n-th
/// component of the stage-(n-1) residual applied to e_y. Diagonal entries
/// come out zero and are asserted.
InnerData compute_rho(const HigherDerivation& d, DecomposeTrace* trace = nullptr);

struct VerifyResult {
    bool ok = true;
    int n = -1;    // first discrepant component
    int seg = -1;  // basis segment whose image differs
};

/// Componentwise equality of d and hd_inner(rho) * tm_tilde(sigma).
VerifyResult verify(const HigherDerivation& d, const InnerData& rho, const TransitiveMap& sigma);

/// Splits d as Delta_rho * sigma-tilde; every internal assertion failure
/// is reported as an Error with a witness.
Decomposition decompose(const HigherDerivation& d, DecomposeTrace* trace = nullptr);

struct Lemma2Report {
    bool ok = true;
    std::string detail;  // first failing identity, human-readable
};

/// For d with d_n(e_x) = 0 for 1 <= n < N: checks
/// d_N(e_x) = e_x d_N(e_X) + d_N(e_x) e_X for x in X, the two coefficient
/// consequences for x < y, and the antisymmetry d_N(e_x)_{xy} = -d_N(e_y)_{xy}.
Lemma2Report lemma2_probe(const HigherDerivation& d, const std::vector<int>& X, int N);

}  // namespace fia

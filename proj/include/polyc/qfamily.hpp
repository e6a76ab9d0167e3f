#pragma once

#include "polyc/mpoly.hpp"

namespace polyc {

// Families of derivative polynomials. PFamily members live over MU+Z with
// symbolic mu_{iq}; QFamily members are their specializations over L+Z.
struct PFamily {
    int n = 1;
    std::vector<MPoly> polys; // polys[l-1] = P_{n,l}
    const MPoly& at(int l) const { return polys.at(l - 1); }
};

struct QFamily {
    int n = 1;
    std::vector<MPoly> polys; // polys[l-1] = Q_{n,l}
    const MPoly& at(int l) const { return polys.at(l - 1); }
};

// P_{n,1} = sum_i mu_{i1} z_i
MPoly p_initial(int n);

// One application of the derivative recurrence:
//   P' = sum_{i,q} (q mu_{iq} + mu_{i,q+1}) z_i dP/dmu_{iq}
//      + sum_i (-z_i + sum_{j<i} mu_{j1} z_j) z_i dP/dz_i
// The mu block is extended internally as needed.
MPoly p_step(int n, const MPoly& P);

// mu_{iq} := (-1)^{q-1} (q-1)! (lambda_i - 1); result over L+Z.
MPoly mu_specialize(const MPoly& P);

// Q_{n,1} = sum_i (lambda_i - 1) z_i
MPoly q_initial(int n);

// The operator D_n:  Q' = sum_i (-z_i + sum_{j<i} (lambda_j - 1) z_j) z_i dQ/dz_i.
// The inner index j in (lambda_j - 1) is forced: it is what the mu-recurrence
// turns into under the specialization mu_{j1} = lambda_j - 1.
MPoly q_step(int n, const MPoly& Q);

QFamily q_family(int n, int l_max);
PFamily p_family(int n, int l_max);

// Both link-property branches for Q_{n,l}: setting z_j = 0, or lambda_j = 1,
// reproduces Q_{n-1,l} after index relabeling.
bool link_property_holds(int n, int l);

// Lambda_n = prod over nonempty subsets I of (lambda^I - 1).
MPoly big_lambda(int n);

// M(l_i, l_j, l_k) = 4(l_i l_j l_k - 1) - (l_i - 1)(l_j - 1)(l_k - 1).
MPoly m_poly(const VariableSpace& s, int i, int j, int k);

// The explicit genericity polynomials for n = 1..4.
MPoly l_small(int n);

// L_n = (l_1...l_n - 1) * prod_j R(lambdas with l_j omitted), where R is a
// polynomial in n-1 lambda variables.
MPoly l_general(int n, const MPoly& resultant);

// Substitute lambda_i := 1 + t into Q_{n-1,l}, cancel the factor t, then set
// t = 0. Must equal (-1)^{l-1} (l-1)! (z_1^l + ... + z_{n-1}^l).
MPoly power_sum_limit(int n, int l);

// p_l and sigma_l over the Z block of s.
MPoly power_sum(const VariableSpace& s, int l);
MPoly elementary_symmetric(const VariableSpace& s, int l);

} // namespace polyc

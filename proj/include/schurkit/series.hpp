#pragma once

#include <string>

#include "schurkit/cohomology.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// The sixteen classical S-function series. They come in mutually inverse
/// pairs L*M = P*Q = A*B = C*D = E*F = G*H = R*S = V*W = 1.
enum class SeriesId { L, M, P, Q, A, B, C, D, E, F, G, H, R, S, V, W };

const char* series_name(SeriesId id);
SeriesId series_from_name(const std::string& name);
SeriesId series_inverse(SeriesId id);

/// L, M, P, Q, R, S, V, W have generating products of the form
/// prod_i (1 - f(x_i))^{+-1}; their characteristic cochains are 1-cocycles
/// and the induced branchings are trivial.
bool series_group_like(SeriesId id);

/// Weight-capped Schur expansion of a series; constant term 1.
struct TruncatedSeries {
    SeriesId id;
    int cap = 0;
    SymFunc expansion;  // Schur basis, cap-marked
};

TruncatedSeries series(SeriesId id, int cap);

/// Truncated outer product at the smaller of the two caps.
SymFunc series_product(const SymFunc& a, const SymFunc& b);
SymFunc series_product(const TruncatedSeries& a, const TruncatedSeries& b);

/// Exact coefficient of s_lambda in a series. Closed content formulas for
/// L,M,P,Q,A,B,C,D,V,W; the mixed products E,F,G,H,R,S expand on demand.
Rat series_coeff(SeriesId id, const Partition& lambda);

/// Characteristic 1-cochain of a series: the (signed) coefficient table,
/// truncated to zero above the cap.
Cochain characteristic_cochain(SeriesId id, int cap);

}  // namespace schurkit

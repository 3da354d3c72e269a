#pragma once

// Independent reference implementations used to cross-check the kernel.
// Everything here works from first principles (monomial expansions, direct
// tableau counts, recurrences) and deliberately avoids the kernel's
// Littlewood-Richardson, transition-matrix, and series code paths.

#include <map>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/rational.hpp"
#include "schurkit/series.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit::oracle {

/// Truncated multivariate polynomial: exponent vector (fixed variable count)
/// to exact rational coefficient.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rat>;

Poly poly_const(int nvars, const Rat& c);
Poly poly_mul(const Poly& a, const Poly& b, int max_degree);

/// s_lambda(x_1..x_nvars) as a sum over semistandard tableaux.
Poly schur_polynomial(const Partition& lambda, int nvars);

/// Decomposition of a symmetric polynomial into Schur polynomials by
/// peeling the lexicographically largest monomial, degree by degree.
/// Faithful for components of degree <= nvars.
std::map<Partition, Rat, PartitionLess> schur_decompose(Poly p, int nvars);

/// Kostka number as a direct semistandard-tableau count: fillings of shape
/// with the given content.
long long ssyt_count(const Partition& shape, const Partition& content);

/// Number of standard tableaux f^lambda.
long long standard_tableaux_count(const Partition& lambda);

/// Partition counts by the pentagonal-number recurrence.
long long partition_count_pentagonal(int n);

/// Antipode computed by the convolution recursion (no closed formula):
/// S(s_lambda) = -(sum over proper sub-diagrams of S(s_alpha) s_{lambda/alpha}).
SymFunc antipode_by_recursion(const SymFunc& f);

/// Generating-product expansion of a series in nvars variables, truncated
/// at total degree max_degree. Defined for L,M,P,Q,A,B,C,D,V,W.
Poly series_generating_poly(SeriesId id, int nvars, int max_degree);

}  // namespace schurkit::oracle

#pragma once

#include "tapsp/common.hpp"
#include "tapsp/matrix.hpp"
#include "tapsp/ring.hpp"

namespace tapsp {

/// Bound M' on the magnitude of every finite entry of the operands.
struct EntryBound {
  Weight value = 0;
};

/// C[i,j] = min_k A[i,k] + B[k,j]; +inf where no finite term exists.
WeightMatrix dist_product_naive(const WeightMatrix& a, const WeightMatrix& b);

/// Same result as dist_product_naive, computed through one integer matrix product.
///
/// Each finite entry x becomes the integer z^(M'-x) with z a power of two strictly
/// greater than the inner dimension, +inf becomes 0. Every digit of an entry of the
/// integer product counts the k attaining that exponent, so no digit ever carries and
/// the top nonzero digit position p gives the minimum as 2M' - p.
WeightMatrix dist_product_fast(const WeightMatrix& a, const WeightMatrix& b, EntryBound bound,
                               const RingOptions& ring = {});
/// Uses the tightest bound of the operands.
WeightMatrix dist_product_fast(const WeightMatrix& a, const WeightMatrix& b, const RingOptions& ring = {});

/// <D>_t: entries with |e| > t become +inf.
WeightMatrix truncate(const WeightMatrix& d, Weight t);

/// Entrywise minimum.
WeightMatrix min_merge(const WeightMatrix& r, const WeightMatrix& s);

/// Finite entries become ceil(e / k) (mathematical ceiling, also for negatives).
WeightMatrix scale_div_ceil(const WeightMatrix& p, Weight k);

/// Finite entries multiplied by k.
WeightMatrix scale_mul(const WeightMatrix& p, Weight k);

/// Finite entries shifted by c.
WeightMatrix add_finite(const WeightMatrix& p, Weight c);

/// Entries inside [lo, hi] are decreased by shift; all others become +inf.
WeightMatrix window_shift(const WeightMatrix& p, Weight lo, Weight hi, Weight shift);

/// Boolean product over bit-packed rows.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
/// Boolean product through ring_matmul with nonzero saturation.
BoolMatrix bool_product_ring(const BoolMatrix& a, const BoolMatrix& b, const RingOptions& ring = {});

/// C = B^2 over polynomials; coefficient q of C[u,v] is true iff some w and
/// q1 + q2 = q have both B[u,w] coefficient q1 and B[w,v] coefficient q2 set.
/// Entries are evaluated at x = 2^b > n*s: a coefficient counts (w, q1) pairs, so it
/// is at most n*s and never carries into the next digit.
PolyMatrix poly_square(const PolyMatrix& b, const RingOptions& ring = {});

}  // namespace tapsp

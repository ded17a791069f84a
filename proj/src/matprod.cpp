#include "tapsp/matprod.hpp"

#include <algorithm>
#include <bit>

#include "tapsp/counters.hpp"
#include "tapsp/parallel.hpp"
#include "tapsp/simd.hpp"

namespace tapsp {

namespace {

// Bits per digit for a digit-safe radix 2^b > max_count.
unsigned digit_bits(std::size_t max_count) {
  return std::max(1U, static_cast<unsigned>(std::bit_width(max_count)));
}

void check_bound(const WeightMatrix& m, Weight bound) {
  if (m.max_abs_finite() > bound)
    throw ContractError("dist_product_fast: entry exceeds the declared bound " + std::to_string(bound));
}

BigMatrix encode_exponents(const WeightMatrix& m, Weight bound, unsigned bits) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Weight e = m(i, j);
      if (is_inf(e)) continue;
      mpz_setbit(out(i, j).get_mpz_t(), static_cast<mp_bitcnt_t>(bound - e) * bits);
    }
  return out;
}

}  // namespace

WeightMatrix dist_product_naive(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("dist_product: inner dimension mismatch");
  WeightMatrix c(a.rows(), b.cols());
  const simd::Isa isa = simd::active();
  std::vector<std::uint64_t> relax(a.rows(), 0);
  parallel_for(0, a.rows(), [&](std::size_t i) {
    auto out = c.row(i);
    const auto lhs = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_inf(lhs[k])) continue;
      simd::minplus_accumulate(lhs[k], b.row(k), out, isa);
      relax[i] += b.cols();
    }
  });
  std::uint64_t total = 0;
  for (auto r : relax) total += r;
  detail::add_minplus_relax(total);
  return c;
}

WeightMatrix dist_product_fast(const WeightMatrix& a, const WeightMatrix& b, EntryBound bound,
                               const RingOptions& ring) {
  if (a.cols() != b.rows()) throw ContractError("dist_product: inner dimension mismatch");
  if (bound.value < 0) throw ContractError("dist_product_fast: negative bound");
  check_bound(a, bound.value);
  check_bound(b, bound.value);

  WeightMatrix c(a.rows(), b.cols());
  if (a.cols() == 0) return c;

  const unsigned bits = digit_bits(a.cols());
  const BigMatrix product =
      ring_matmul(encode_exponents(a, bound.value, bits), encode_exponents(b, bound.value, bits), ring);

  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const mpz_class& v = product(i, j);
      if (sgn(v) == 0) continue;
      const auto top_bit = mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
      const auto digit = static_cast<Weight>(top_bit / bits);
      c(i, j) = 2 * bound.value - digit;
    }
  return c;
}

WeightMatrix dist_product_fast(const WeightMatrix& a, const WeightMatrix& b, const RingOptions& ring) {
  return dist_product_fast(a, b, EntryBound{std::max(a.max_abs_finite(), b.max_abs_finite())}, ring);
}

WeightMatrix truncate(const WeightMatrix& d, Weight t) {
  if (t < 0) throw ContractError("truncate: negative threshold");
  WeightMatrix out = d;
  for (std::size_t i = 0; i < out.rows(); ++i) simd::truncate_inplace(out.row(i), t);
  return out;
}

WeightMatrix min_merge(const WeightMatrix& r, const WeightMatrix& s) {
  if (r.rows() != s.rows() || r.cols() != s.cols()) throw ContractError("min_merge: shape mismatch");
  WeightMatrix out = r;
  for (std::size_t i = 0; i < out.rows(); ++i) simd::min_into(out.row(i), s.row(i));
  return out;
}

WeightMatrix scale_div_ceil(const WeightMatrix& p, Weight k) {
  if (k < 1) throw ContractError("scale_div_ceil: divisor must be positive");
  WeightMatrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (Weight& e : out.row(i)) {
      if (is_inf(e)) continue;
      Weight q = e / k;
      if (e % k != 0 && e > 0) ++q;
      e = q;
    }
  return out;
}

WeightMatrix scale_mul(const WeightMatrix& p, Weight k) {
  WeightMatrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (Weight& e : out.row(i))
      if (!is_inf(e)) e *= k;
  return out;
}

WeightMatrix add_finite(const WeightMatrix& p, Weight c) {
  WeightMatrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (Weight& e : out.row(i))
      if (!is_inf(e)) e += c;
  return out;
}

WeightMatrix window_shift(const WeightMatrix& p, Weight lo, Weight hi, Weight shift) {
  WeightMatrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (Weight& e : out.row(i)) e = (!is_inf(e) && e >= lo && e <= hi) ? e - shift : kInf;
  return out;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("bool_product: inner dimension mismatch");
  BoolMatrix c(a.rows(), b.cols());
  const simd::Isa isa = simd::active();
  std::vector<std::uint64_t> ors(a.rows(), 0);
  parallel_for(0, a.rows(), [&](std::size_t i) {
    auto out = c.row_words(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      simd::or_into(out, b.row_words(k), isa);
      ++ors[i];
    }
  });
  std::uint64_t total = 0;
  for (auto o : ors) total += o;
  detail::add_bool_row_ors(total);
  return c;
}

BoolMatrix bool_product_ring(const BoolMatrix& a, const BoolMatrix& b, const RingOptions& ring) {
  if (a.cols() != b.rows()) throw ContractError("bool_product: inner dimension mismatch");
  auto encode = [](const BoolMatrix& m) {
    BigMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.get(i, j)) out(i, j) = 1;
    return out;
  };
  const BigMatrix product = ring_matmul(encode(a), encode(b), ring);
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (sgn(product(i, j)) != 0) c.set(i, j);
  return c;
}

PolyMatrix poly_square(const PolyMatrix& b, const RingOptions& ring) {
  const std::size_t n = b.n;
  const std::size_t s = b.terms();
  for (const auto& plane : b.coeffs)
    if (plane.rows() != n || plane.cols() != n) throw ContractError("poly_square: plane shape mismatch");
  PolyMatrix c{n, {}};
  if (s == 0) return c;
  c.coeffs.assign(2 * s - 1, BoolMatrix(n, n));
  if (n == 0) return c;

  const unsigned bits = digit_bits(n * s);
  BigMatrix encoded(n, n);
  for (std::size_t q = 0; q < s; ++q)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (b.coeffs[q].get(u, v)) mpz_setbit(encoded(u, v).get_mpz_t(), q * bits);

  const BigMatrix product = ring_matmul(encoded, encoded, ring);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const mpz_srcptr value = product(u, v).get_mpz_t();
      if (mpz_sgn(value) == 0) continue;
      for (mp_bitcnt_t bit = mpz_scan1(value, 0); bit != ~mp_bitcnt_t{0}; bit = mpz_scan1(value, bit + 1)) {
        const std::size_t q = bit / bits;
        c.coeffs[q].set(u, v);
        bit = static_cast<mp_bitcnt_t>((q + 1) * bits - 1);  // skip to the next digit
      }
    }
  return c;
}

}  // namespace tapsp

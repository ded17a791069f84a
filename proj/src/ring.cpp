#include "tapsp/ring.hpp"

#include <algorithm>
#include <bit>

#include "tapsp/common.hpp"
#include "tapsp/counters.hpp"
#include "tapsp/parallel.hpp"

namespace tapsp {

namespace {

BigMatrix schoolbook(const BigMatrix& a, const BigMatrix& b) {
  BigMatrix c(a.rows(), b.cols());
  const std::size_t inner = a.cols();
  std::vector<std::uint64_t> mults(a.rows(), 0);
  parallel_for(0, a.rows(), [&](std::size_t i) {
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < inner; ++k) {
      const mpz_class& lhs = a(i, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const mpz_class& rhs = b(k, j);
        if (sgn(rhs) == 0) continue;
        mpz_addmul(c(i, j).get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
        ++count;
      }
    }
    mults[i] = count;
  });
  std::uint64_t total = 0;
  for (auto m : mults) total += m;
  detail::add_ring_mults(total);
  return c;
}

BigMatrix quadrant(const BigMatrix& m, std::size_t qi, std::size_t qj) {
  const std::size_t h = m.rows() / 2;
  BigMatrix out(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) out(i, j) = m(qi * h + i, qj * h + j);
  return out;
}

BigMatrix add(const BigMatrix& x, const BigMatrix& y) {
  BigMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) + y(i, j);
  return out;
}

BigMatrix sub(const BigMatrix& x, const BigMatrix& y) {
  BigMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) - y(i, j);
  return out;
}

// a and b are square with power-of-two dimension.
BigMatrix strassen(const BigMatrix& a, const BigMatrix& b, std::size_t cutoff) {
  const std::size_t n = a.rows();
  if (n <= cutoff || n == 1) return schoolbook(a, b);

  const BigMatrix a11 = quadrant(a, 0, 0), a12 = quadrant(a, 0, 1);
  const BigMatrix a21 = quadrant(a, 1, 0), a22 = quadrant(a, 1, 1);
  const BigMatrix b11 = quadrant(b, 0, 0), b12 = quadrant(b, 0, 1);
  const BigMatrix b21 = quadrant(b, 1, 0), b22 = quadrant(b, 1, 1);

  const BigMatrix m1 = strassen(add(a11, a22), add(b11, b22), cutoff);
  const BigMatrix m2 = strassen(add(a21, a22), b11, cutoff);
  const BigMatrix m3 = strassen(a11, sub(b12, b22), cutoff);
  const BigMatrix m4 = strassen(a22, sub(b21, b11), cutoff);
  const BigMatrix m5 = strassen(add(a11, a12), b22, cutoff);
  const BigMatrix m6 = strassen(sub(a21, a11), add(b11, b12), cutoff);
  const BigMatrix m7 = strassen(sub(a12, a22), add(b21, b22), cutoff);

  const std::size_t h = n / 2;
  BigMatrix c(n, n);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      c(i, j) = m1(i, j) + m4(i, j) - m5(i, j) + m7(i, j);
      c(i, j + h) = m3(i, j) + m5(i, j);
      c(i + h, j) = m2(i, j) + m4(i, j);
      c(i + h, j + h) = m1(i, j) - m2(i, j) + m3(i, j) + m6(i, j);
    }
  }
  return c;
}

BigMatrix padded(const BigMatrix& m, std::size_t n) {
  BigMatrix out(n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

BigMatrix ring_matmul(const BigMatrix& a, const BigMatrix& b, const RingOptions& options) {
  if (a.cols() != b.rows()) throw ContractError("ring_matmul: inner dimension mismatch");
  if (options.kernel == RingKernel::schoolbook || a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    return schoolbook(a, b);

  const std::size_t dim = std::bit_ceil(std::max({a.rows(), a.cols(), b.cols()}));
  const BigMatrix full = strassen(padded(a, dim), padded(b, dim), std::max<std::size_t>(1, options.strassen_cutoff));
  BigMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = full(i, j);
  return c;
}

}  // namespace tapsp

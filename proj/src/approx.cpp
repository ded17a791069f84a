#include "tapsp/approx.hpp"

#include <cmath>

#include "tapsp/matprod.hpp"

namespace tapsp {

ApproxResult additive_approximate(const Rpdm& p, const Level& level, Rng& rng, const RingOptions& ring) {
  if (std::abs(p.beta - level.beta) > 1e-9 || std::abs(p.gamma - level.gamma) > 1e-9)
    throw ContractError("additive_approximate: matrix was built for different (beta, gamma)");

  const Vertex n = p.n();
  const double nd = static_cast<double>(n);
  const double count = 12.0 * std::pow(nd, 1.0 - level.gamma) * std::log(std::max(nd, 1.0));
  const VertexSet everyone = all_vertices(n);

  ApproxResult out{{}, level, sample(everyone, count, rng)};
  const WeightMatrix scaled = scale_div_ceil(p.p, level.k);
  const WeightMatrix q =
      dist_product_fast(scaled.select(everyone, out.sample), scaled.select(out.sample, everyone), ring);
  out.delta_star = scale_mul(q, level.k);
  return out;
}

}  // namespace tapsp

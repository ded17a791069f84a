#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tapsp {

/// Edge weights and distances. Vertices are 0-based in the API and 1-based in files and CLI output.
using Weight = std::int64_t;
using Vertex = std::int32_t;

/// Canonical +infinity. Finite values must stay well below kInf / 2 in magnitude so
/// that sums of two finite entries never reach it.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

constexpr bool is_inf(Weight w) { return w >= kInf; }

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or contract violation on an API call.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NegativeCycleError : public Error {
 public:
  explicit NegativeCycleError(std::vector<Vertex> cycle);
  /// Vertices of one negative cycle in traversal order (0-based).
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

}  // namespace tapsp

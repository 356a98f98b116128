#ifndef XLINE_FFIELD_HPP
#define XLINE_FFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xline/errors.hpp"

namespace xline {

// Element of GF(p^k) in polynomial representation: coeffs[i] is the
// coefficient of t^i, reduced mod p, with exactly k entries.
struct FElt {
  std::vector<int> coeffs;

  bool operator==(const FElt&) const = default;
  // Low-degree-first lexicographic order; this is the element order used
  // for every canonical enumeration downstream.
  bool operator<(const FElt& o) const { return coeffs < o.coeffs; }
};

// Immutable context for arithmetic in GF(p^k), p an odd prime.
// All operations are exact and pure; safe for concurrent reads.
class FieldCtx {
 public:
  // Builds GF(p^k). When k > 1 and no modulus is given, the
  // lexicographically smallest monic irreducible (coefficients compared
  // low-degree first) is found by exhaustive search. A supplied modulus is
  // given as k+1 coefficients, low degree first, and must be monic and
  // irreducible over GF(p).
  static std::shared_ptr<const FieldCtx> make(
      long p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  const FElt& primitive() const { return primitive_; }

  FElt zero() const { return FElt{std::vector<int>(k_, 0)}; }
  FElt one() const { return from_int(1); }
  FElt from_int(long v) const;

  // Elements are indexed 0..q-1 by their base-p digit string (coeffs[0] is
  // the least significant digit).
  FElt element(long index) const;
  long index_of(const FElt& x) const;

  bool is_zero(const FElt& x) const;

  FElt add(const FElt& a, const FElt& b) const;
  FElt sub(const FElt& a, const FElt& b) const;
  FElt neg(const FElt& a) const;
  FElt mul(const FElt& a, const FElt& b) const;
  FElt inv(const FElt& a) const;          // DivisionByZero on 0
  FElt pow(const FElt& a, long e) const;  // negative e inverts first

  // Quadratic character: true iff x is a nonzero square, i.e.
  // x^((q-1)/2) = 1. Rejects 0 with ZeroArgument.
  bool is_square(const FElt& x) const;

  std::string elt_str(const FElt& x) const;  // "t+2" style rendering
  std::string label() const;                 // "GF(9)"

 private:
  FieldCtx() = default;

  std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b) const;

  long p_ = 0;
  long q_ = 0;
  int k_ = 0;
  std::vector<int> modulus_;     // length k+1, monic; {0,1} placeholder when k=1
  FElt primitive_;               // generator of the multiplicative group
  std::vector<char> square_table_;  // indexed by element index; [0] unused
};

}  // namespace xline

#endif  // XLINE_FFIELD_HPP

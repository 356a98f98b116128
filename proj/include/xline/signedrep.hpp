#ifndef XLINE_SIGNEDREP_HPP
#define XLINE_SIGNEDREP_HPP

#include <iosfwd>
#include <vector>

#include "xline/projgeom.hpp"

namespace xline {

// Element of the hyperoctahedral wreath product acting on n lines: a
// permutation of indices plus a sign per index. Applying g to the symbol
// (i, s) gives (perm[i], s * signs[i]).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;  // entries are +1 or -1

  int n() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPerm&) const = default;
};

SignedPerm identity_sp(int n);

// Group law matching the sign cocycle: apply b first, then a.
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& a);
bool is_valid_signed_perm(const SignedPerm& a);

// The signed permutation of a matrix acting on the canonical line basis:
// M * v_i = lambda_i * v_{perm[i]}, sign +1 when lambda_i is a square.
SignedPerm lift(const ProjBasis& basis, const MatG& M);

// Single orbit on ordered pairs of distinct indices, computed by closing
// the seed pair (0,1) under the generators and their inverses.
bool is_two_transitive(const std::vector<SignedPerm>& gens, int n);

struct SignedOrbitReport {
  int orbit_count_X2 = 0;    // orbits on ordered pairs of distinct indices
  int orbit_count_YxY = 0;   // orbits on pairs of signed symbols
  int orbit_count_nabla = 0; // YxY orbits whose pairs lie on distinct lines
  bool transitive_on_Y = false;
};

// Y is the 2n-symbol set (index, sign); orbits on Y x Y via union-find.
SignedOrbitReport orbits_on_signed_pairs(const std::vector<SignedPerm>& gens, int n);

// Independent orbit count on Y x Y: enumerate the generated group and
// average squared fixed-point counts. GroupTooLarge when the closure
// exceeds max_order elements.
long burnside_orbit_count(const std::vector<SignedPerm>& gens, int n, long max_order);

// Text format: line 1 "n g"; per generator, a line of n 0-based images
// followed by a line of n signs written + or -.
std::vector<SignedPerm> read_generators(std::istream& in);
void write_generators(std::ostream& out, const std::vector<SignedPerm>& gens);

}  // namespace xline

#endif  // XLINE_SIGNEDREP_HPP

#ifndef XLINE_SEIDEL_HPP
#define XLINE_SEIDEL_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "xline/signedrep.hpp"

namespace xline {

// Symmetric n x n matrix with zero diagonal and +-1 off the diagonal.
struct SeidelMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  int& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
  bool operator==(const SeidelMatrix&) const = default;
};

SeidelMatrix negated(const SeidelMatrix& E);
bool is_seidel(const SeidelMatrix& E);

// Propagation step that found two different values for one entry.
struct Contradiction {
  int i = 0;
  int j = 0;
  int existing = 0;
  int proposed = 0;
};

struct SynthesisResult {
  std::optional<SeidelMatrix> matrix;
  std::optional<Contradiction> certificate;  // set exactly when matrix is absent
};

// Builds the sign matrix invariant under every generator, fixing
// entry (0,1) to seed_sign and closing under e[g(i)][g(j)] = s_i s_j e[i][j]
// with symmetry enforced at each step. 2-transitivity guarantees all
// entries get reached; a clash certifies that no such matrix exists.
// The seed -1 run returns exactly the negation of the +1 run.
SynthesisResult synthesize(const std::vector<SignedPerm>& gens, int n, int seed_sign);

// Checks e[g(i)][g(j)] == s_i s_j e[i][j] for all ordered pairs i != j.
bool verify_invariance(const SeidelMatrix& E, const SignedPerm& g);

// Text format: line 1 is n; then n rows of n characters from {0,+,-}.
void write_seidel(std::ostream& out, const SeidelMatrix& E);
SeidelMatrix read_seidel(std::istream& in);

}  // namespace xline

#endif  // XLINE_SEIDEL_HPP

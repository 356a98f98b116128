#ifndef XLINE_CLASSIFY_HPP
#define XLINE_CLASSIFY_HPP

#include <optional>
#include <string>

#include "xline/spectral.hpp"

namespace xline {

enum class Verdict { IRREDUCIBLE, SPLITS_REAL, SPLITS_COMPLEX_ONLY, INCONSISTENT };

std::string verdict_str(Verdict v);

// What the family dichotomy predicts from (d, q mod 4, determinant class)
// alone, before anything is computed.
struct Predictions {
  Verdict verdict = Verdict::INCONSISTENT;
  int orbit_count = 0;
  bool seidel_exists = false;
  int q_mod4 = 0;
  bool in_glplus = false;
};

struct ClassificationReport {
  std::string group_label;
  int n = 0;
  bool two_transitive = false;
  SignedOrbitReport orbit_report;
  bool seidel_exists = false;
  std::optional<Contradiction> certificate;
  std::optional<SeidelMatrix> seidel;
  std::optional<Spectrum> spectrum;
  std::optional<std::pair<long, QuadVal>> equiangular;  // (dimension, cosine)
  Verdict verdict = Verdict::INCONSISTENT;
  std::optional<Predictions> predictions;
  std::optional<bool> projector_swap;  // eigenspace exchange under diag(gamma,1,...)
  bool consistent = false;
};

// Full pipeline for a built-in family: lift generators, demand
// 2-transitivity, count orbits, synthesize the sign matrix, and take the
// exact spectrum when it exists. The verdict comes from the computation;
// the prediction record is derived independently and compared.
ClassificationReport classify(const GroupSpec& spec, int max_n = 512);

// Same pipeline for caller-supplied signed generators; no predictions.
ClassificationReport classify_generic(const std::vector<SignedPerm>& gens, int n,
                                      const std::string& label, int max_n = 512);

Predictions predict(Family family, int d, long q);

// Conference matrix of order q+1 for q = 1 mod 4: an all-plus border row
// and column around the quadratic-character core C[a][b] = chi(a - b).
// Satisfies C^2 = q*I. WrongResidueClass for q = 3 mod 4.
SeidelMatrix paley_conference(const FieldCtx& F);

// Conjugate by a diagonal sign matrix so row and column 0 are all plus.
SeidelMatrix switching_normalize(const SeidelMatrix& E);

// True iff some vertex permutation carries switching_normalize(E) to
// switching_normalize(C). Brute force with row-sum and minimal-polynomial
// pruning; TooLarge above 20 vertices.
bool paley_match(const SeidelMatrix& E, const SeidelMatrix& C);

}  // namespace xline

#endif  // XLINE_CLASSIFY_HPP

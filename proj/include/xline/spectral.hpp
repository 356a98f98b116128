#ifndef XLINE_SPECTRAL_HPP
#define XLINE_SPECTRAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "xline/quadval.hpp"
#include "xline/seidel.hpp"

namespace xline {

// Two-eigenvalue data of a sign matrix: roots of x^2 - beta*x - alpha with
// lambda1 > lambda2, and their multiplicities.
struct Spectrum {
  long beta = 0;
  long alpha = 0;
  QuadVal lambda1, lambda2;
  long m1 = 0, m2 = 0;
  int n = 0;
};

using QuadMatrix = std::vector<std::vector<QuadVal>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;

// (beta, alpha) with E^2 = beta*E + alpha*I, or nullopt when E has more
// than two eigenvalues. alpha always comes out n-1 for a sign matrix.
std::optional<std::pair<long, long>> quadratic_minpoly(const SeidelMatrix& E);

// Same decision for a rational symmetric matrix (used for shifted
// matrices omega*I + c*E). nullopt also covers scalar matrices, whose
// minimal polynomial has degree 1.
std::optional<std::pair<mpq_class, mpq_class>> quadratic_minpoly_rational(const RatMatrix& A);

// Roots and multiplicities from the minimal polynomial and the zero trace.
// DegenerateSpectrum when beta^2 + 4*alpha <= 0; NonIntegerMultiplicity
// when the trace equation has no positive integer solution.
Spectrum eigen_data(long beta, long alpha, int n);

// Orthogonal eigenprojector P = (E - lambda_other I) / (lambda_which - lambda_other).
// Constant diagonal -lambda2/(lambda1-lambda2) (resp. lambda1/...), and
// off-diagonal entries are E_ij / (lambda1 - lambda2) up to sign.
QuadMatrix projector(const SeidelMatrix& E, const Spectrum& spec, int which);

RatMatrix gram(const mpq_class& omega, const mpq_class& c, const SeidelMatrix& E);

// Number of lines is spec.n, ambient dimension m1, common angle cosine
// 1/|lambda2|.
std::pair<long, QuadVal> equiangular_params(const Spectrum& spec);

QuadMatrix qm_identity(int n);
QuadMatrix qm_from_seidel(const SeidelMatrix& E);
QuadMatrix qm_mul(const QuadMatrix& A, const QuadMatrix& B);
QuadMatrix qm_add(const QuadMatrix& A, const QuadMatrix& B);
QuadMatrix qm_scale(const QuadVal& c, const QuadMatrix& A);
QuadVal qm_trace(const QuadMatrix& A);

}  // namespace xline

#endif  // XLINE_SPECTRAL_HPP

#include "xline/spectral.hpp"

#include <string>

namespace xline {

std::optional<std::pair<long, long>> quadratic_minpoly(const SeidelMatrix& E) {
  int n = E.n;
  if (n < 2) return std::nullopt;
  std::vector<long> sq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int e = E.at(i, k);
      if (e == 0) continue;
      for (int j = 0; j < n; ++j) sq[static_cast<size_t>(i) * n + j] += e * E.at(k, j);
    }
  long alpha = sq[0];  // diagonal of E^2; equals n-1 for a sign matrix
  for (int i = 0; i < n; ++i)
    if (sq[static_cast<size_t>(i) * n + i] != alpha) return std::nullopt;
  long beta = sq[1] * E.at(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sq[static_cast<size_t>(i) * n + j] != beta * E.at(i, j)) return std::nullopt;
  return std::make_pair(beta, alpha);
}

std::optional<std::pair<mpq_class, mpq_class>> quadratic_minpoly_rational(const RatMatrix& A) {
  int n = static_cast<int>(A.size());
  if (n < 2) return std::nullopt;
  RatMatrix sq(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) sq[i][j] += A[i][k] * A[k][j];
    }
  int pi = -1, pj = -1;
  for (int i = 0; i < n && pi < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && A[i][j] != 0) {
        pi = i;
        pj = j;
        break;
      }
  if (pi < 0) return std::nullopt;  // scalar matrix
  mpq_class beta = sq[pi][pj] / A[pi][pj];
  mpq_class alpha = sq[0][0] - beta * A[0][0];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class expect = beta * A[i][j];
      if (i == j) expect += alpha;
      if (sq[i][j] != expect) return std::nullopt;
    }
  return std::make_pair(beta, alpha);
}

Spectrum eigen_data(long beta, long alpha, int n) {
  long disc = beta * beta + 4 * alpha;
  if (disc <= 0)
    fail(Errc::degenerate_spectrum, "x^2 - " + std::to_string(beta) + "x - " + std::to_string(alpha) +
                                        " has no two distinct real roots");
  QuadVal half(mpq_class(1, 2));
  QuadVal root = QuadVal::sqrt_of(disc);
  Spectrum spec;
  spec.beta = beta;
  spec.alpha = alpha;
  spec.n = n;
  spec.lambda1 = (QuadVal(beta) + root) * half;
  spec.lambda2 = (QuadVal(beta) - root) * half;

  // Zero trace: m1*lambda1 + m2*lambda2 = 0 with m1 + m2 = n.
  QuadVal m1v = -(QuadVal(static_cast<long>(n)) * spec.lambda2) / (spec.lambda1 - spec.lambda2);
  if (!m1v.is_rational() || m1v.a().get_den() != 1)
    fail(Errc::non_integer_multiplicity, "trace equation gives multiplicity " + m1v.str());
  long m1 = static_cast<long>(m1v.a().get_num().get_si());
  if (m1 <= 0 || m1 >= n)
    fail(Errc::non_integer_multiplicity, "multiplicities must be positive, got m1 = " + std::to_string(m1));
  spec.m1 = m1;
  spec.m2 = n - m1;
  return spec;
}

namespace {

void check_spec(const SeidelMatrix& E, const Spectrum& spec) {
  if (spec.n != E.n) fail(Errc::size_mismatch, "spectrum size differs from matrix size");
  bool ok = spec.alpha == E.n - 1 && spec.m1 + spec.m2 == spec.n &&
            spec.lambda1 + spec.lambda2 == QuadVal(spec.beta) &&
            spec.lambda1 * spec.lambda2 == QuadVal(-spec.alpha) &&
            (QuadVal(spec.m1) * spec.lambda1 + QuadVal(spec.m2) * spec.lambda2).is_zero();
  // One entry of E^2 = beta E + alpha I pins beta to this matrix without
  // recomputing the whole square.
  if (ok) {
    long sq01 = 0;
    for (int t = 0; t < E.n; ++t) sq01 += static_cast<long>(E.at(0, t)) * E.at(t, 1);
    ok = sq01 == spec.beta * E.at(0, 1);
  }
  if (!ok) fail(Errc::inconsistent_spectrum, "spectrum does not describe this matrix");
}

}  // namespace

QuadMatrix projector(const SeidelMatrix& E, const Spectrum& spec, int which) {
  if (which != 1 && which != 2) fail(Errc::zero_argument, "projector index must be 1 or 2");
  check_spec(E, spec);
  QuadVal gap = spec.lambda1 - spec.lambda2;
  QuadVal diag = which == 1 ? -spec.lambda2 / gap : spec.lambda1 / gap;
  QuadVal off = QuadVal(1L) / gap;
  if (which == 2) off = -off;
  int n = E.n;
  QuadMatrix P(n, std::vector<QuadVal>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P[i][j] = i == j ? diag : off * QuadVal(static_cast<long>(E.at(i, j)));
  return P;
}

RatMatrix gram(const mpq_class& omega, const mpq_class& c, const SeidelMatrix& E) {
  int n = E.n;
  RatMatrix A(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = i == j ? omega : c * E.at(i, j);
  return A;
}

std::pair<long, QuadVal> equiangular_params(const Spectrum& spec) {
  return {spec.m1, QuadVal(1L) / spec.lambda2.abs()};
}

QuadMatrix qm_identity(int n) {
  QuadMatrix I(n, std::vector<QuadVal>(n, QuadVal(0L)));
  for (int i = 0; i < n; ++i) I[i][i] = QuadVal(1L);
  return I;
}

QuadMatrix qm_from_seidel(const SeidelMatrix& E) {
  QuadMatrix A(E.n, std::vector<QuadVal>(E.n, QuadVal(0L)));
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j) A[i][j] = QuadVal(static_cast<long>(E.at(i, j)));
  return A;
}

QuadMatrix qm_mul(const QuadMatrix& A, const QuadMatrix& B) {
  size_t n = A.size();
  if (n == 0 || B.size() != n) fail(Errc::size_mismatch, "matrix sizes differ");
  QuadMatrix C(n, std::vector<QuadVal>(n, QuadVal(0L)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] = C[i][j] + A[i][k] * B[k][j];
    }
  return C;
}

QuadMatrix qm_add(const QuadMatrix& A, const QuadMatrix& B) {
  size_t n = A.size();
  if (B.size() != n) fail(Errc::size_mismatch, "matrix sizes differ");
  QuadMatrix C = A;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) C[i][j] = C[i][j] + B[i][j];
  return C;
}

QuadMatrix qm_scale(const QuadVal& c, const QuadMatrix& A) {
  QuadMatrix C = A;
  for (auto& row : C)
    for (auto& v : row) v = c * v;
  return C;
}

QuadVal qm_trace(const QuadMatrix& A) {
  QuadVal t(0L);
  for (size_t i = 0; i < A.size(); ++i) t = t + A[i][i];
  return t;
}

}  // namespace xline

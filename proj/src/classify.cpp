#include "xline/classify.hpp"

#include <algorithm>

namespace xline {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::IRREDUCIBLE: return "IRREDUCIBLE";
    case Verdict::SPLITS_REAL: return "SPLITS_REAL";
    case Verdict::SPLITS_COMPLEX_ONLY: return "SPLITS_COMPLEX_ONLY";
    case Verdict::INCONSISTENT: return "INCONSISTENT";
  }
  return "INCONSISTENT";
}

Predictions predict(Family family, int d, long q) {
  Predictions p;
  p.q_mod4 = static_cast<int>(q % 4);
  p.in_glplus = family != Family::GL;  // SL and GL+ have square determinants
  if (d >= 3)
    p.verdict = Verdict::IRREDUCIBLE;
  else if (!p.in_glplus)
    p.verdict = Verdict::IRREDUCIBLE;
  else
    p.verdict = p.q_mod4 == 1 ? Verdict::SPLITS_REAL : Verdict::SPLITS_COMPLEX_ONLY;
  p.orbit_count = p.verdict == Verdict::IRREDUCIBLE ? 3 : 4;
  p.seidel_exists = p.verdict == Verdict::SPLITS_REAL;
  return p;
}

namespace {

ClassificationReport run_pipeline(const std::vector<SignedPerm>& gens, int n,
                                  const std::string& label, int max_n) {
  if (n > max_n)
    fail(Errc::bound_exceeded,
         "n = " + std::to_string(n) + " exceeds the size bound " + std::to_string(max_n));

  ClassificationReport report;
  report.group_label = label;
  report.n = n;
  report.two_transitive = is_two_transitive(gens, n);
  if (!report.two_transitive)
    fail(Errc::not_two_transitive, label + " does not act 2-transitively on the lines");

  report.orbit_report = orbits_on_signed_pairs(gens, n);

  SynthesisResult syn = synthesize(gens, n, 1);
  report.seidel_exists = syn.matrix.has_value();
  report.certificate = syn.certificate;

  int orbits = report.orbit_report.orbit_count_YxY;
  if (report.seidel_exists) {
    report.seidel = std::move(syn.matrix);
    auto minpoly = quadratic_minpoly(*report.seidel);
    if (minpoly && orbits == 4) {
      report.spectrum = eigen_data(minpoly->first, minpoly->second, n);
      report.equiangular = equiangular_params(*report.spectrum);
      report.verdict = Verdict::SPLITS_REAL;
    } else {
      // An invariant sign matrix with one orbit class too few, or with more
      // than two eigenvalues: not a configuration the dichotomy allows.
      report.verdict = Verdict::INCONSISTENT;
    }
  } else {
    report.verdict = orbits == 3   ? Verdict::IRREDUCIBLE
                     : orbits == 4 ? Verdict::SPLITS_COMPLEX_ONLY
                                   : Verdict::INCONSISTENT;
  }
  report.consistent = report.verdict != Verdict::INCONSISTENT;
  return report;
}

}  // namespace

ClassificationReport classify(const GroupSpec& spec, int max_n) {
  ProjBasis basis(spec.ctx, spec.d);
  std::vector<SignedPerm> gens;
  gens.reserve(spec.generators.size());
  for (const auto& M : spec.generators) gens.push_back(lift(basis, M));

  ClassificationReport report = run_pipeline(gens, basis.n(), spec.label, max_n);
  report.predictions = predict(spec.family, spec.d, spec.ctx->q());

  if (report.consistent) {
    const Predictions& p = *report.predictions;
    report.consistent = report.verdict == p.verdict &&
                        report.orbit_report.orbit_count_YxY == p.orbit_count &&
                        report.seidel_exists == p.seidel_exists;
  }

  // Soft check: conjugating an eigenprojector by a non-square-determinant
  // element should land on the other projector (the two eigenspaces are
  // exchanged outside GL+). Informational; never gates consistency.
  if (report.spectrum) {
    const FieldCtx& F = *spec.ctx;
    MatG D = identity_mat(F, spec.d);
    D.at(0, 0) = F.primitive();
    SignedPerm g = lift(basis, D);
    QuadMatrix P1 = projector(*report.seidel, *report.spectrum, 1);
    QuadMatrix P2 = projector(*report.seidel, *report.spectrum, 2);
    int n = report.n;
    QuadMatrix Q(n, std::vector<QuadVal>(n, QuadVal(0L)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        Q[g.perm[i]][g.perm[j]] = QuadVal(static_cast<long>(g.signs[i] * g.signs[j])) * P1[i][j];
    report.projector_swap = Q == P2;
  }
  return report;
}

ClassificationReport classify_generic(const std::vector<SignedPerm>& gens, int n,
                                      const std::string& label, int max_n) {
  for (const auto& g : gens)
    if (g.n() != n) fail(Errc::size_mismatch, "generator size differs from n");
  return run_pipeline(gens, n, label, max_n);
}

SeidelMatrix paley_conference(const FieldCtx& F) {
  long q = F.q();
  if (q % 4 != 1)
    fail(Errc::wrong_residue_class,
         "conference core is antisymmetric for q = " + std::to_string(q) + " (need q = 1 mod 4)");
  int n = static_cast<int>(q) + 1;
  SeidelMatrix C;
  C.n = n;
  C.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int j = 1; j < n; ++j) {
    C.at(0, j) = 1;
    C.at(j, 0) = 1;
  }
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) {
      if (a == b) continue;
      FElt diff = F.sub(F.element(a), F.element(b));
      C.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = F.is_square(diff) ? 1 : -1;
    }
  return C;
}

SeidelMatrix switching_normalize(const SeidelMatrix& E) {
  if (!is_seidel(E)) fail(Errc::parse_error, "input is not a sign matrix");
  int n = E.n;
  std::vector<int> d(n, 1);
  for (int j = 1; j < n; ++j) d[j] = E.at(0, j);
  SeidelMatrix out = E;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = d[i] * d[j] * E.at(i, j);
  return out;
}

namespace {

std::vector<int> row_sums(const SeidelMatrix& E) {
  std::vector<int> sums(E.n, 0);
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j) sums[i] += E.at(i, j);
  return sums;
}

bool extend_match(const SeidelMatrix& A, const SeidelMatrix& B, const std::vector<int>& sa,
                  const std::vector<int>& sb, std::vector<int>& image, std::vector<char>& used,
                  int depth) {
  int n = A.n;
  if (depth == n) return true;
  for (int p = 0; p < n; ++p) {
    if (used[p] || sa[p] != sb[depth]) continue;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j) ok = A.at(p, image[j]) == B.at(depth, j);
    if (!ok) continue;
    image[depth] = p;
    used[p] = 1;
    if (extend_match(A, B, sa, sb, image, used, depth + 1)) return true;
    used[p] = 0;
  }
  return false;
}

}  // namespace

bool paley_match(const SeidelMatrix& E, const SeidelMatrix& C) {
  if (E.n != C.n) fail(Errc::size_mismatch, "matrix sizes differ");
  if (E.n > 20) fail(Errc::too_large, "isomorphism search is limited to 20 vertices");
  SeidelMatrix A = switching_normalize(E);
  SeidelMatrix B = switching_normalize(C);

  std::vector<int> sa = row_sums(A), sb = row_sums(B);
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }
  if (quadratic_minpoly(A) != quadratic_minpoly(B)) return false;

  std::vector<int> image(E.n, -1);
  std::vector<char> used(E.n, 0);
  return extend_match(A, B, sa, sb, image, used, 0);
}

}  // namespace xline

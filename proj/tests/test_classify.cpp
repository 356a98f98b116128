#include "xline/classify.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace xline;

namespace {

ClassificationReport classify_family(Family family, long p, int k, int d, int max_n = 512) {
  auto F = FieldCtx::make(p, k);
  return classify(group_generators(family, F, d), max_n);
}

}  // namespace

TEST_CASE("order-6 case: matrix exists and the module splits over the reals") {
  ClassificationReport r = classify_family(Family::SL, 5, 1, 2);
  CHECK(r.group_label == "SL(2,5)");
  CHECK(r.n == 6);
  CHECK(r.two_transitive);
  CHECK(r.orbit_report.orbit_count_YxY == 4);
  CHECK(r.orbit_report.orbit_count_nabla == 2);
  CHECK(r.seidel_exists);
  REQUIRE(r.spectrum.has_value());
  CHECK(r.spectrum->beta == 0);
  CHECK(r.spectrum->alpha == 5);
  CHECK(r.spectrum->m1 == 3);
  CHECK(r.spectrum->m2 == 3);
  REQUIRE(r.equiangular.has_value());
  CHECK(r.equiangular->first == 3);
  CHECK(r.equiangular->second == QuadVal(1) / QuadVal::sqrt_of(5));
  CHECK(r.verdict == Verdict::SPLITS_REAL);
  REQUIRE(r.predictions.has_value());
  CHECK(r.predictions->verdict == Verdict::SPLITS_REAL);
  CHECK(r.predictions->q_mod4 == 1);
  CHECK(r.predictions->in_glplus);
  REQUIRE(r.projector_swap.has_value());
  CHECK(*r.projector_swap);
  CHECK(r.consistent);
}

TEST_CASE("order-13 case: three orbits force irreducibility") {
  ClassificationReport r = classify_family(Family::SL, 3, 1, 3);
  CHECK(r.group_label == "SL(3,3)");
  CHECK(r.n == 13);
  CHECK(r.orbit_report.orbit_count_YxY == 3);
  CHECK_FALSE(r.seidel_exists);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->existing == -r.certificate->proposed);
  CHECK_FALSE(r.spectrum.has_value());
  CHECK(r.verdict == Verdict::IRREDUCIBLE);
  CHECK(r.predictions->verdict == Verdict::IRREDUCIBLE);
  CHECK(r.consistent);
}

TEST_CASE("order-8 case: four orbits but no invariant matrix") {
  ClassificationReport r = classify_family(Family::SL, 7, 1, 2);
  CHECK(r.n == 8);
  CHECK(r.orbit_report.orbit_count_YxY == 4);
  CHECK_FALSE(r.seidel_exists);
  REQUIRE(r.certificate.has_value());
  CHECK(r.verdict == Verdict::SPLITS_COMPLEX_ONLY);
  CHECK(r.predictions->q_mod4 == 3);
  CHECK(r.consistent);
}

TEST_CASE("extension field case q = 9") {
  ClassificationReport r = classify_family(Family::SL, 3, 2, 2);
  CHECK(r.group_label == "SL(2,9)");
  CHECK(r.n == 10);
  CHECK(r.seidel_exists);
  REQUIRE(r.spectrum.has_value());
  CHECK(r.spectrum->alpha == 9);
  CHECK(r.spectrum->lambda1 == QuadVal(3));  // rational eigenvalues here
  CHECK(r.spectrum->m1 == 5);
  CHECK(r.equiangular->second == QuadVal(mpq_class(1, 3)));
  CHECK(r.verdict == Verdict::SPLITS_REAL);
  CHECK(r.consistent);
}

TEST_CASE("full linear group collapses the orbit count") {
  ClassificationReport r = classify_family(Family::GL, 5, 1, 2);
  CHECK(r.group_label == "GL(2,5)");
  CHECK(r.orbit_report.orbit_count_YxY == 3);
  CHECK_FALSE(r.seidel_exists);
  CHECK(r.verdict == Verdict::IRREDUCIBLE);
  CHECK(r.predictions->verdict == Verdict::IRREDUCIBLE);
  CHECK_FALSE(r.predictions->in_glplus);
  CHECK(r.consistent);
}

TEST_CASE("dichotomy grid stays consistent") {
  const long qs[] = {3, 5, 7, 9, 11, 13, 17};
  int checked = 0;
  for (Family fam : {Family::SL, Family::GLplus, Family::GL})
    for (int d = 2; d <= 3; ++d)
      for (long q : qs) {
        long p = q == 9 ? 3 : q;
        int k = q == 9 ? 2 : 1;
        auto F = FieldCtx::make(p, k);
        ProjBasis basis(F, d);
        if (basis.n() > 512) continue;
        ClassificationReport r = classify(group_generators(fam, F, d));
        CAPTURE(r.group_label);
        CHECK(r.consistent);
        CHECK((r.orbit_report.orbit_count_YxY == 3 || r.orbit_report.orbit_count_YxY == 4));
        CHECK(r.seidel_exists == (r.verdict == Verdict::SPLITS_REAL));
        if (r.orbit_report.orbit_count_YxY == 3) {
          CHECK(r.verdict == Verdict::IRREDUCIBLE);
          CHECK_FALSE(r.seidel_exists);
        }
        ++checked;
      }
  CHECK(checked == 42);
}

TEST_CASE("prediction table") {
  CHECK(predict(Family::SL, 3, 3).verdict == Verdict::IRREDUCIBLE);
  CHECK(predict(Family::SL, 2, 5).verdict == Verdict::SPLITS_REAL);
  CHECK(predict(Family::SL, 2, 13).verdict == Verdict::SPLITS_REAL);
  CHECK(predict(Family::SL, 2, 7).verdict == Verdict::SPLITS_COMPLEX_ONLY);
  CHECK(predict(Family::SL, 2, 11).verdict == Verdict::SPLITS_COMPLEX_ONLY);
  CHECK(predict(Family::GLplus, 2, 9).verdict == Verdict::SPLITS_REAL);
  CHECK(predict(Family::GL, 2, 5).verdict == Verdict::IRREDUCIBLE);
  CHECK(predict(Family::SL, 2, 5).orbit_count == 4);
  CHECK(predict(Family::GL, 2, 5).orbit_count == 3);
  CHECK(predict(Family::SL, 2, 7).seidel_exists == false);
  CHECK(predict(Family::SL, 2, 9).seidel_exists == true);
}

TEST_CASE("caller-supplied generators reach the defensive verdict") {
  // The full signed swap group on 2 lines: 2-transitive, but with far more
  // than four orbits on signed pairs, so no family prediction fits.
  SignedPerm swap{{1, 0}, {1, 1}};
  ClassificationReport r = classify_generic({swap}, 2, "swap-pair");
  CHECK(r.group_label == "swap-pair");
  CHECK(r.two_transitive);
  CHECK(r.orbit_report.orbit_count_YxY == 8);
  CHECK(r.verdict == Verdict::INCONSISTENT);
  CHECK_FALSE(r.predictions.has_value());
  CHECK_FALSE(r.consistent);
}

TEST_CASE("size guard trips before any group work") {
  CHECK(code_of([&] { classify_family(Family::SL, 5, 1, 2, 5); }) == Errc::bound_exceeded);
  CHECK(code_of([&] {
          classify_generic({identity_sp(3)}, 3, "trivial");
        }) == Errc::not_two_transitive);
}

TEST_CASE("conference matrix construction") {
  auto F5 = FieldCtx::make(5, 1);
  SeidelMatrix C = paley_conference(*F5);
  CHECK(C.n == 6);
  CHECK(is_seidel(C));
  for (int j = 1; j < 6; ++j) {
    CHECK(C.at(0, j) == 1);
    CHECK(C.at(j, 0) == 1);
  }
  auto mp = quadratic_minpoly(C);
  REQUIRE(mp.has_value());
  CHECK(mp->first == 0);
  CHECK(mp->second == 5);

  auto F13 = FieldCtx::make(13, 1);
  SeidelMatrix C13 = paley_conference(*F13);
  CHECK(C13.n == 14);
  auto mp13 = quadratic_minpoly(C13);
  REQUIRE(mp13.has_value());
  CHECK(mp13->second == 13);

  auto F7 = FieldCtx::make(7, 1);
  CHECK(code_of([&] { paley_conference(*F7); }) == Errc::wrong_residue_class);
}

TEST_CASE("switching normalization fixes the first row and column") {
  auto F13 = FieldCtx::make(13, 1);
  SeidelMatrix C = paley_conference(*F13);
  SeidelMatrix flipped = C;
  // Conjugate by diag(1,-1,1,...): switching-equivalent, different entries.
  for (int j = 0; j < C.n; ++j)
    if (j != 1) {
      flipped.at(1, j) = -flipped.at(1, j);
      flipped.at(j, 1) = -flipped.at(j, 1);
    }
  CHECK(is_seidel(flipped));
  SeidelMatrix norm = switching_normalize(flipped);
  for (int j = 1; j < C.n; ++j) {
    CHECK(norm.at(0, j) == 1);
    CHECK(norm.at(j, 0) == 1);
  }
  CHECK(norm.entries == switching_normalize(C).entries);
}

TEST_CASE("matrix of the order-14 case matches the conference matrix") {
  ClassificationReport r = classify_family(Family::SL, 13, 1, 2);
  REQUIRE(r.seidel.has_value());
  auto F13 = FieldCtx::make(13, 1);
  SeidelMatrix C = paley_conference(*F13);
  CHECK(paley_match(*r.seidel, C));

  // and a deliberate non-match: damage one entry pair of C
  SeidelMatrix D = C;
  D.at(2, 3) = -D.at(2, 3);
  D.at(3, 2) = -D.at(3, 2);
  CHECK_FALSE(paley_match(*r.seidel, D));
}

TEST_CASE("order-6 matrix is switching-isomorphic to its negation") {
  ClassificationReport r = classify_family(Family::SL, 5, 1, 2);
  REQUIRE(r.seidel.has_value());
  CHECK(paley_match(*r.seidel, negated(*r.seidel)));
  auto F5 = FieldCtx::make(5, 1);
  CHECK(paley_match(negated(*r.seidel), paley_conference(*F5)));
}

TEST_CASE("matching is capped at 20 vertices") {
  SeidelMatrix big;
  big.n = 21;
  big.entries.assign(21 * 21, 0);
  CHECK(code_of([&] { paley_match(big, big); }) == Errc::too_large);
}

TEST_CASE("verdict names") {
  CHECK(verdict_str(Verdict::IRREDUCIBLE) == "IRREDUCIBLE");
  CHECK(verdict_str(Verdict::SPLITS_REAL) == "SPLITS_REAL");
  CHECK(verdict_str(Verdict::SPLITS_COMPLEX_ONLY) == "SPLITS_COMPLEX_ONLY");
  CHECK(verdict_str(Verdict::INCONSISTENT) == "INCONSISTENT");
}

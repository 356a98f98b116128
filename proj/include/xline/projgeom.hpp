#ifndef XLINE_PROJGEOM_HPP
#define XLINE_PROJGEOM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xline/ffield.hpp"

namespace xline {

// d x d matrix over a finite field, row-major; acts on column vectors.
struct MatG {
  int d = 0;
  std::vector<FElt> entries;  // entries[r * d + c]

  const FElt& at(int r, int c) const { return entries[r * d + c]; }
  FElt& at(int r, int c) { return entries[r * d + c]; }
};

// The set X of vector lines of F_q^d, each held by a canonical
// representative whose first nonzero coordinate is 1. Points are sorted
// lexicographically by coordinate sequence (coordinate 0 most significant,
// field elements compared by coefficient sequence).
class ProjBasis {
 public:
  ProjBasis(std::shared_ptr<const FieldCtx> ctx, int d);

  const FieldCtx& field() const { return *ctx_; }
  std::shared_ptr<const FieldCtx> field_ptr() const { return ctx_; }
  int d() const { return d_; }
  int n() const { return static_cast<int>(points_.size()); }
  const std::vector<FElt>& point(int i) const { return points_[i]; }

  // Index of the line through M * point(i), plus the scalar lambda such
  // that M * v_i = lambda * v_j exactly.
  std::pair<int, FElt> act_on_point(const MatG& M, int i) const;

  int index_of_canonical(const std::vector<FElt>& v) const;

 private:
  std::shared_ptr<const FieldCtx> ctx_;
  int d_;
  std::vector<std::vector<FElt>> points_;
};

enum class Family { SL, GLplus, GL };

struct GroupSpec {
  Family family;
  std::shared_ptr<const FieldCtx> ctx;
  int d = 0;
  std::vector<MatG> generators;
  std::string label;
};

MatG identity_mat(const FieldCtx& F, int d);
MatG mat_mul(const FieldCtx& F, const MatG& A, const MatG& B);
FElt mat_det(const FieldCtx& F, const MatG& M);

// True iff det(M) is a nonzero square. SingularMatrix on det 0.
bool det_is_square(const FieldCtx& F, const MatG& M);

// Generator sets: SL = all transvections I + gamma^m * e_{rs} (r != s,
// 0 <= m < k), which generate SL_d(q) since {gamma^m} spans F_q over F_p.
// GLplus appends diag(gamma^2, 1, ..., 1); GL appends diag(gamma, 1, ..., 1).
GroupSpec group_generators(Family family, std::shared_ptr<const FieldCtx> ctx, int d);

std::optional<Family> family_from_string(const std::string& s);
std::string family_label(Family family, int d, long q);

// |SL_d(q)|, |GL+_d(q)|, |GL_d(q)| computed in 128-bit arithmetic;
// nullopt when the order does not fit in 64 bits.
std::optional<unsigned long long> family_order(Family family, int d, long q);

// Order of the image of the family group in the signed-permutation group:
// family order divided by the number of scalars lambda*I lying in the group
// with lambda a square (those act trivially on lines with all-plus signs).
std::optional<unsigned long long> lifted_image_order(Family family, const FieldCtx& F, int d);

}  // namespace xline

#endif  // XLINE_PROJGEOM_HPP

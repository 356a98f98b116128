#include "xline/projgeom.hpp"

#include <algorithm>
#include <map>

namespace xline {

namespace {

// Scale v so its first nonzero coordinate (scanning from index 0) is 1.
// Returns the scalar that was divided out; v must be nonzero.
FElt canonicalize(const FieldCtx& F, std::vector<FElt>& v) {
  for (auto& c : v) {
    if (!F.is_zero(c)) {
      FElt lead = c;
      FElt s = F.inv(lead);
      for (auto& x : v) x = F.mul(s, x);
      return lead;
    }
  }
  fail(Errc::zero_argument, "cannot canonicalize the zero vector");
}

}  // namespace

ProjBasis::ProjBasis(std::shared_ptr<const FieldCtx> ctx, int d) : ctx_(std::move(ctx)), d_(d) {
  if (d < 2) fail(Errc::dimension_too_small, "projective enumeration needs d >= 2");
  const FieldCtx& F = *ctx_;
  long q = F.q();
  // Canonical vectors: zeros, then a leading 1 at position f, then d-1-f
  // free coordinates. Total (q^d - 1)/(q - 1).
  for (int f = 0; f < d_; ++f) {
    int free = d_ - 1 - f;
    long count = 1;
    for (int i = 0; i < free; ++i) {
      count *= q;
      if (count > (1L << 30)) fail(Errc::bound_exceeded, "projective point count overflow");
    }
    for (long code = 0; code < count; ++code) {
      std::vector<FElt> v(d_, F.zero());
      v[f] = F.one();
      for (int i = f + 1; i < d_; ++i) {
        long digits = 1;
        for (int j = i + 1; j < d_; ++j) digits *= q;
        v[i] = F.element((code / digits) % q);
      }
      points_.push_back(std::move(v));
    }
  }
  std::sort(points_.begin(), points_.end());
}

int ProjBasis::index_of_canonical(const std::vector<FElt>& v) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), v);
  if (it == points_.end() || *it != v) fail(Errc::zero_argument, "vector is not a canonical point");
  return static_cast<int>(it - points_.begin());
}

std::pair<int, FElt> ProjBasis::act_on_point(const MatG& M, int i) const {
  const FieldCtx& F = *ctx_;
  if (M.d != d_) fail(Errc::size_mismatch, "matrix dimension does not match basis");
  if (F.is_zero(mat_det(F, M))) fail(Errc::singular_matrix, "matrix is singular");
  const auto& v = points_[i];
  std::vector<FElt> w(d_, F.zero());
  for (int r = 0; r < d_; ++r)
    for (int c = 0; c < d_; ++c) w[r] = F.add(w[r], F.mul(M.at(r, c), v[c]));
  FElt lambda = canonicalize(F, w);
  return {index_of_canonical(w), lambda};
}

MatG identity_mat(const FieldCtx& F, int d) {
  MatG I;
  I.d = d;
  I.entries.assign(static_cast<size_t>(d) * d, F.zero());
  for (int i = 0; i < d; ++i) I.at(i, i) = F.one();
  return I;
}

MatG mat_mul(const FieldCtx& F, const MatG& A, const MatG& B) {
  if (A.d != B.d) fail(Errc::size_mismatch, "matrix dimensions differ");
  int d = A.d;
  MatG C;
  C.d = d;
  C.entries.assign(static_cast<size_t>(d) * d, F.zero());
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      if (F.is_zero(A.at(r, k))) continue;
      for (int c = 0; c < d; ++c) C.at(r, c) = F.add(C.at(r, c), F.mul(A.at(r, k), B.at(k, c)));
    }
  return C;
}

FElt mat_det(const FieldCtx& F, const MatG& M) {
  // Gaussian elimination with row swaps; exact over the field.
  int d = M.d;
  MatG A = M;
  FElt det = F.one();
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!F.is_zero(A.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      for (int c = 0; c < d; ++c) std::swap(A.at(pivot, c), A.at(col, c));
      det = F.neg(det);
    }
    det = F.mul(det, A.at(col, col));
    FElt inv_p = F.inv(A.at(col, col));
    for (int r = col + 1; r < d; ++r) {
      if (F.is_zero(A.at(r, col))) continue;
      FElt factor = F.mul(A.at(r, col), inv_p);
      for (int c = col; c < d; ++c) A.at(r, c) = F.sub(A.at(r, c), F.mul(factor, A.at(col, c)));
    }
  }
  return det;
}

bool det_is_square(const FieldCtx& F, const MatG& M) {
  FElt det = mat_det(F, M);
  if (F.is_zero(det)) fail(Errc::singular_matrix, "matrix is singular");
  return F.is_square(det);
}

GroupSpec group_generators(Family family, std::shared_ptr<const FieldCtx> ctx, int d) {
  if (d < 2) fail(Errc::dimension_too_small, "group families need d >= 2");
  const FieldCtx& F = *ctx;
  GroupSpec spec;
  spec.family = family;
  spec.ctx = ctx;
  spec.d = d;
  spec.label = family_label(family, d, F.q());

  FElt gpow = F.one();
  std::vector<FElt> params;  // gamma^0 .. gamma^(k-1), an F_p-basis of F_q
  for (int m = 0; m < F.k(); ++m) {
    params.push_back(gpow);
    gpow = F.mul(gpow, F.primitive());
  }
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      if (r == s) continue;
      for (const auto& c : params) {
        MatG T = identity_mat(F, d);
        T.at(r, s) = c;
        spec.generators.push_back(std::move(T));
      }
    }

  if (family != Family::SL) {
    MatG D = identity_mat(F, d);
    D.at(0, 0) = family == Family::GL ? F.primitive() : F.mul(F.primitive(), F.primitive());
    spec.generators.push_back(std::move(D));
  }
  return spec;
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "sl") return Family::SL;
  if (s == "glplus") return Family::GLplus;
  if (s == "gl") return Family::GL;
  return std::nullopt;
}

std::string family_label(Family family, int d, long q) {
  std::string head = family == Family::SL ? "SL" : family == Family::GLplus ? "GL+" : "GL";
  return head + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
}

std::optional<unsigned long long> family_order(Family family, int d, long q) {
  __int128 qd = 1;
  for (int i = 0; i < d; ++i) {
    qd *= q;
    // Keeps every later product comfortably inside 128 bits.
    if (qd > static_cast<__int128>(1) << 40) return std::nullopt;
  }
  __int128 order = 1;
  __int128 qi = 1;
  const __int128 cap = static_cast<__int128>(~0ULL);
  for (int i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= q;
    if (order > cap) return std::nullopt;
  }
  if (family == Family::SL) order /= q - 1;
  if (family == Family::GLplus) order /= 2;
  if (order > cap) return std::nullopt;
  return static_cast<unsigned long long>(order);
}

std::optional<unsigned long long> lifted_image_order(Family family, const FieldCtx& F, int d) {
  auto order = family_order(family, d, F.q());
  if (!order) return std::nullopt;
  // Scalars lambda*I in the group whose lift is the identity: lambda must be
  // a square (all signs +1) and lambda^d = det must satisfy the family's
  // determinant constraint.
  unsigned long long kernel = 0;
  for (long idx = 1; idx < F.q(); ++idx) {
    FElt lambda = F.element(idx);
    if (!F.is_square(lambda)) continue;
    FElt det = F.pow(lambda, d);
    bool in_group = family == Family::GL     ? true
                    : family == Family::SL   ? det == F.one()
                                             : F.is_square(det);
    if (in_group) ++kernel;
  }
  return *order / kernel;
}

}  // namespace xline

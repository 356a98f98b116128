#include "xline/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace xline {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_norm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Polynomial arithmetic over GF(p), coefficients low degree first. These
// helpers trim trailing zeros so degree == size-1 for nonzero polys.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, long p) {
  // m is monic so no inversions are needed.
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    long c = a.back();
    for (int i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<int>(mod_norm(a[shift + i] - c * m[i], p));
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<int>(mod_norm(out[i + j] + static_cast<long>(a[i]) * b[j], p));
  trim(out);
  return out;
}

// Checks irreducibility by trial division against every monic polynomial of
// degree 1..deg/2. Fine at the sizes this library targets.
bool poly_irreducible(const Poly& m, long p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      // Remainder of m by div: reuse poly_mod since div is monic.
      Poly r = poly_mod(m, div, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(long p, int k,
                                               std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) fail(Errc::non_prime, "field characteristic must be prime, got " + std::to_string(p));
  if (p == 2) fail(Errc::even_characteristic, "characteristic 2 is not supported");
  if (k < 1) fail(Errc::zero_argument, "extension degree must be >= 1");

  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1L << 20)) fail(Errc::bound_exceeded, "field size exceeds 2^20");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->q_ = q;

  if (k == 1) {
    ctx->modulus_ = {0, 1};  // placeholder: plain prime field
    if (modulus && *modulus != ctx->modulus_)
      fail(Errc::reducible_modulus, "prime fields take no modulus");
  } else if (modulus) {
    if (static_cast<int>(modulus->size()) != k + 1 || modulus->back() != 1)
      fail(Errc::reducible_modulus, "modulus must be monic of degree k");
    for (int& c : *modulus) c = static_cast<int>(mod_norm(c, p));
    if (!poly_irreducible(*modulus, p))
      fail(Errc::reducible_modulus, "modulus is reducible over GF(p)");
    ctx->modulus_ = *modulus;
  } else {
    // Smallest monic irreducible of degree k, coefficients compared low
    // degree first. Digit codes order by the high coefficient, not the low
    // one, so generate everything and sort by coefficient vector.
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    std::vector<Poly> candidates;
    for (long code = 0; code < count; ++code) {
      Poly m(k + 1, 0);
      long c = code;
      for (int i = 0; i < k; ++i) {
        m[i] = static_cast<int>(c % p);
        c /= p;
      }
      m[k] = 1;
      candidates.push_back(std::move(m));
    }
    std::sort(candidates.begin(), candidates.end());
    bool found = false;
    for (auto& m : candidates) {
      if (poly_irreducible(m, p)) {
        ctx->modulus_ = m;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::reducible_modulus, "no irreducible modulus found");  // unreachable
  }

  // Find a primitive element: order q-1 checked via the prime factors of q-1.
  auto factors = prime_factors(q - 1);
  FElt prim = ctx->zero();
  bool found_prim = false;
  for (long idx = 1; idx < q && !found_prim; ++idx) {
    FElt g = ctx->element(idx);
    bool ok = true;
    for (long f : factors) {
      FElt t = ctx->pow(g, (q - 1) / f);
      if (t == ctx->one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      prim = g;
      found_prim = true;
    }
  }
  if (!found_prim) fail(Errc::zero_argument, "no primitive element found");  // unreachable
  ctx->primitive_ = prim;

  // Square table: mark g^2 for every nonzero g, then cross-check against the
  // Euler criterion so a bad modulus or primitive search shows up here.
  ctx->square_table_.assign(q, 0);
  for (long idx = 1; idx < q; ++idx) {
    FElt g = ctx->element(idx);
    ctx->square_table_[ctx->index_of(ctx->mul(g, g))] = 1;
  }
  for (long idx = 1; idx < q; ++idx) {
    FElt g = ctx->element(idx);
    bool euler = ctx->pow(g, (q - 1) / 2) == ctx->one();
    if (euler != static_cast<bool>(ctx->square_table_[idx]))
      fail(Errc::inconsistent_spectrum, "square table disagrees with Euler criterion");
  }

  return ctx;
}

FElt FieldCtx::from_int(long v) const {
  FElt x = zero();
  x.coeffs[0] = static_cast<int>(mod_norm(v, p_));
  return x;
}

FElt FieldCtx::element(long index) const {
  if (index < 0 || index >= q_) fail(Errc::zero_argument, "element index out of range");
  FElt x = zero();
  for (int i = 0; i < k_; ++i) {
    x.coeffs[i] = static_cast<int>(index % p_);
    index /= p_;
  }
  return x;
}

long FieldCtx::index_of(const FElt& x) const {
  long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + x.coeffs[i];
  return idx;
}

bool FieldCtx::is_zero(const FElt& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](int c) { return c == 0; });
}

FElt FieldCtx::add(const FElt& a, const FElt& b) const {
  FElt out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = static_cast<int>(mod_norm(a.coeffs[i] + b.coeffs[i], p_));
  return out;
}

FElt FieldCtx::sub(const FElt& a, const FElt& b) const {
  FElt out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = static_cast<int>(mod_norm(a.coeffs[i] - b.coeffs[i], p_));
  return out;
}

FElt FieldCtx::neg(const FElt& a) const { return sub(zero(), a); }

std::vector<int> FieldCtx::poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b) const {
  Poly prod = poly_mul(a, b, p_);
  if (k_ > 1) prod = poly_mod(std::move(prod), modulus_, p_);
  prod.resize(k_, 0);
  return prod;
}

FElt FieldCtx::mul(const FElt& a, const FElt& b) const { return FElt{poly_mul_mod(a.coeffs, b.coeffs)}; }

FElt FieldCtx::pow(const FElt& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  FElt base = a;
  FElt acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FElt FieldCtx::inv(const FElt& a) const {
  if (is_zero(a)) fail(Errc::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

bool FieldCtx::is_square(const FElt& x) const {
  if (is_zero(x)) fail(Errc::zero_argument, "quadratic character of zero is undefined");
  return square_table_[index_of(x)] != 0;
}

std::string FieldCtx::elt_str(const FElt& x) const {
  if (is_zero(x)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    int c = x.coeffs[i];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string FieldCtx::label() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace xline

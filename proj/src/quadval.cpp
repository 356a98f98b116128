#include "xline/quadval.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace xline {

namespace {

// m = s*s*f with f square-free; returns (s, f).
std::pair<long, long> split_square(long m) {
  long s = 1, f = 1;
  for (long d = 2; d * d <= m; ++d) {
    long e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (long i = 0; i < e / 2; ++i) s *= d;
    if (e % 2) f *= d;
  }
  f *= m;
  return {s, f};
}

int sign_of(const mpq_class& x) { return sgn(x); }

}  // namespace

QuadVal::QuadVal(mpq_class a, mpq_class b, long D) : a_(std::move(a)), b_(std::move(b)), D_(D) {
  if (D_ < 0) fail(Errc::zero_argument, "negative radicand");
  if (D_ == 0) {
    b_ = 0;  // b*sqrt(0) vanishes
    return;
  }
  auto [s, f] = split_square(D_);
  D_ = f;
  b_ *= s;
  if (D_ == 1) {
    a_ += b_;
    b_ = 0;
    D_ = 0;
  }
  if (b_ == 0) D_ = 0;
}

namespace {

long merged_radicand(const QuadVal& x, const QuadVal& y) {
  if (x.D() == 0) return y.D();
  if (y.D() == 0) return x.D();
  if (x.D() != y.D()) fail(Errc::size_mismatch, "values live in different quadratic fields");
  return x.D();
}

}  // namespace

QuadVal operator+(const QuadVal& x, const QuadVal& y) {
  long D = merged_radicand(x, y);
  return QuadVal(x.a() + y.a(), x.b() + y.b(), D);
}

QuadVal operator-(const QuadVal& x, const QuadVal& y) {
  long D = merged_radicand(x, y);
  return QuadVal(x.a() - y.a(), x.b() - y.b(), D);
}

QuadVal operator-(const QuadVal& x) { return QuadVal(-x.a(), -x.b(), x.D()); }

QuadVal operator*(const QuadVal& x, const QuadVal& y) {
  long D = merged_radicand(x, y);
  return QuadVal(x.a() * y.a() + x.b() * y.b() * D, x.a() * y.b() + x.b() * y.a(), D);
}

QuadVal operator/(const QuadVal& x, const QuadVal& y) {
  if (y.is_zero()) fail(Errc::division_by_zero, "division by zero");
  long D = merged_radicand(x, y);
  // Multiply by the conjugate; the norm a^2 - b^2 D is a nonzero rational
  // because sqrt(D) is irrational for square-free D > 1.
  mpq_class norm = y.a() * y.a() - y.b() * y.b() * D;
  if (norm == 0) fail(Errc::division_by_zero, "zero norm");
  QuadVal num = x * QuadVal(y.a(), -y.b(), D);
  return QuadVal(num.a() / norm, num.b() / norm, D);
}

bool QuadVal::operator<(const QuadVal& y) const {
  // Sign of (a1 - a2) + (b1 - b2) sqrt(D), exactly.
  long D = merged_radicand(*this, y);
  mpq_class x = a_ - y.a_;
  mpq_class b = b_ - y.b_;
  if (b == 0 || D == 0) return sign_of(x) < 0;
  int sx = sign_of(x), sb = sign_of(b);
  if (sx <= 0 && sb < 0) return true;
  if (sx >= 0 && sb > 0) return false;
  // Opposite signs: decided by comparing x^2 against b^2 D.
  mpq_class lhs = x * x, rhs = b * b * D;
  if (sx > 0) return lhs < rhs;  // x > 0 > b: negative iff x < |b| sqrt(D)
  return rhs < lhs;              // x < 0 < b: negative iff |x| > b sqrt(D)
}

QuadVal QuadVal::abs() const { return *this < QuadVal(0) ? -*this : *this; }

double QuadVal::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(D_)); }

std::string QuadVal::str() const {
  auto rat = [](const mpq_class& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
      os << r.get_num();
    else
      os << r.get_num() << "/" << r.get_den();
    return os.str();
  };
  if (b_ == 0) return rat(a_);
  std::ostringstream os;
  if (a_ != 0) os << rat(a_) << (b_ > 0 ? " + " : " - ");
  mpq_class babs = b_ > 0 ? b_ : mpq_class(-b_);
  if (a_ == 0 && b_ < 0) os << "-";
  if (babs != 1) {
    bool wrap = babs.get_den() != 1;
    os << (wrap ? "(" : "") << rat(babs) << (wrap ? ")" : "") << "*";
  }
  os << "sqrt(" << D_ << ")";
  return os.str();
}

QuadVal QuadVal::sqrt_of(long m) {
  if (m < 0) fail(Errc::zero_argument, "square root of a negative integer");
  if (m == 0) return QuadVal(0L);
  auto [s, f] = split_square(m);
  if (f == 1) return QuadVal(mpq_class(s));
  return QuadVal(0, mpq_class(s), f);
}

}  // namespace xline

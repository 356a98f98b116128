#ifndef XLINE_QUADVAL_HPP
#define XLINE_QUADVAL_HPP

#include <gmpxx.h>

#include <string>

#include "xline/errors.hpp"

namespace xline {

// Exact number a + b*sqrt(D) with rational a, b and square-free D >= 0.
// Normal form: b == 0 forces D = 0, and D in {0,1} is folded into a, so
// equality is plain field comparison.
class QuadVal {
 public:
  QuadVal() : a_(0), b_(0), D_(0) {}
  QuadVal(mpq_class a) : a_(std::move(a)), b_(0), D_(0) {}
  QuadVal(long v) : a_(v), b_(0), D_(0) {}
  QuadVal(mpq_class a, mpq_class b, long D);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  long D() const { return D_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend QuadVal operator+(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator-(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator-(const QuadVal& x);
  friend QuadVal operator*(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator/(const QuadVal& x, const QuadVal& y);
  friend bool operator==(const QuadVal& x, const QuadVal& y) = default;

  // Order of the real embedding (sqrt(D) is the positive root).
  bool operator<(const QuadVal& y) const;

  QuadVal abs() const;
  double to_double() const;
  std::string str() const;

  // sqrt(m) for integer m >= 0, with the square part of m pulled out.
  static QuadVal sqrt_of(long m);

 private:
  mpq_class a_, b_;
  long D_;
};

}  // namespace xline

#endif  // XLINE_QUADVAL_HPP

#ifndef XLINE_ERRORS_HPP
#define XLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xline {

enum class Errc {
  non_prime,
  even_characteristic,
  reducible_modulus,
  zero_argument,
  division_by_zero,
  dimension_too_small,
  singular_matrix,
  size_mismatch,
  not_two_transitive,
  group_too_large,
  bound_exceeded,
  non_integer_multiplicity,
  degenerate_spectrum,
  inconsistent_spectrum,
  wrong_residue_class,
  too_large,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace xline

#endif  // XLINE_ERRORS_HPP

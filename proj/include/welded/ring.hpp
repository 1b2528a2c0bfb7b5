#pragma once

// Exact arithmetic in R = Z[t1^±1, ..., t_mu^±1] and determinants over R.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace welded {

using Integer = mpz_class;

/// Exponent of each variable t1..t_mu. Entries may be negative.
using Exponents = std::vector<int>;

struct Term {
  Exponents exponents;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponents == b.exponents && a.coeff == b.coeff;
  }
};

class LaurentPoly;

/// A unit of R: sign * t^exponents.
struct UnitMonomial {
  int sign = 1;
  Exponents exponents;

  static UnitMonomial one(int nvars) { return {1, Exponents(static_cast<std::size_t>(nvars), 0)}; }

  UnitMonomial inverse() const;
  LaurentPoly to_poly() const;
  bool is_one() const;
  std::string to_string() const;

  friend UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b);
  friend bool operator==(const UnitMonomial& a, const UnitMonomial& b) = default;
};

/// Sparse Laurent polynomial with integer coefficients. Terms are kept in
/// ascending lexicographic order of exponent vectors, never with a zero
/// coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Integer& c);
  static LaurentPoly variable(int nvars, int index, int power = 1);
  static LaurentPoly monomial(int nvars, Exponents exponents, const Integer& c);
  static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// True for ±t^a.
  bool is_unit() const noexcept;
  /// The value if this is a constant (including zero).
  std::optional<Integer> constant_value() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  LaurentPoly times(const UnitMonomial& u) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. `-t1^2*t2 + 3 - t2^-1`. With a single variable the
  /// name is `t`.
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul, neg };

/// Ring operation dispatch. `neg` ignores `b`.
LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// q with q*b == a. Throws DivisibilityError when b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Returns (p, u) with a == u*p, every variable's minimum exponent in p equal
/// to 0 and p's lexicographically least term positive. Zero maps to (0, +1).
std::pair<LaurentPoly, UnitMonomial> normalize_unit(const LaurentPoly& a);

/// Substitutes nonzero integers for some variables (1-based index). A negative
/// power of a value other than ±1 leaves Z and raises DomainError.
LaurentPoly specialize(const LaurentPoly& a, const std::map<int, long>& values);

/// Parses the text form produced by `LaurentPoly::to_string`. `t` means t1.
/// With nvars < 0 the variable count is the largest index that appears (≥ 1).
LaurentPoly parse_poly(std::string_view text, int nvars = -1);

/// Largest variable index mentioned in `text` (0 if none).
int max_variable_index(std::string_view text);

std::string variable_name(int nvars, int index);

/// Dense matrix over R with labelled rows and columns.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int nvars);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int nvars() const noexcept { return nvars_; }

  LaurentPoly& at(int r, int c) { return entries_[index(r, c)]; }
  const LaurentPoly& at(int r, int c) const { return entries_[index(r, c)]; }

  std::vector<std::string>& row_labels() noexcept { return row_labels_; }
  std::vector<std::string>& col_labels() noexcept { return col_labels_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  int col_index(const std::string& label) const;

  /// The submatrix on the given columns, in the given order.
  PolyMatrix select_columns(const std::vector<int>& cols) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  int nvars_ = 0;
  std::vector<LaurentPoly> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Laplace expansion along the first row.
LaurentPoly cofactor_determinant(const PolyMatrix& m);
/// Fraction-free elimination with row pivoting.
LaurentPoly bareiss_determinant(const PolyMatrix& m);
/// Cofactor expansion up to 4x4, Bareiss above.
LaurentPoly determinant(const PolyMatrix& m);

/// Matrix product over R.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace welded

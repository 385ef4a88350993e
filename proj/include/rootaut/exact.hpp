#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rootaut {

// mpq_class keeps itself canonical (lowest terms, positive denominator) as
// long as we never build one from raw num/den without canonicalize().
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);
Rational parse_rational(const std::string& text);  // "3", "-1/2"
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

Vector zero_vector(std::size_t d);
Vector unit_vector(std::size_t d, std::size_t i, long scale = 1);
Rational dot(const Vector& a, const Vector& b);
Rational norm2(const Vector& a);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Rational& c);
Vector negated(const Vector& a);
bool is_zero(const Vector& a);
std::string to_string(const Vector& v);

// Strict lexicographic order on coordinates; the canonical root order.
bool lex_less(const Vector& a, const Vector& b);

struct VectorHash {
  std::size_t operator()(const Vector& v) const;
};

// Dense exact matrix, row-major. Only what the root-system code needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  Vector apply(const Vector& v) const;
  RationalMatrix transpose() const;
  bool operator==(const RationalMatrix& o) const;

  // Throws ParameterError when singular or non-square.
  RationalMatrix inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Row-reduces the given vectors and returns a maximal independent subset
// (as indices into the input, in input order).
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs);

// Solves sum_j c_j basis_j = target; nullopt if target is outside the span.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target);

}  // namespace rootaut

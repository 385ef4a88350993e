#include "rootaut/exact.hpp"

#include <algorithm>
#include <utility>

#include "rootaut/errors.hpp"

namespace rootaut {

Rational make_rational(long num, long den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParameterError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw ParameterError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Vector zero_vector(std::size_t d) { return Vector(d, Rational(0)); }

Vector unit_vector(std::size_t d, std::size_t i, long scale) {
  Vector v = zero_vector(d);
  v.at(i) = scale;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Rational norm2(const Vector& a) { return dot(a, a); }

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(const Vector& a, const Rational& c) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Vector negated(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

std::size_t VectorHash::operator()(const Vector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) {
    std::size_t k = std::hash<std::string>{}(x.get_str());
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw ParameterError("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector RationalMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ParameterError("vector length does not match matrix");
  Vector r = zero_vector(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw ParameterError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw ParameterError("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

namespace {

// Incremental echelon basis: returns true if v was independent of what is
// already stored (and stores its reduced form).
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  bool insert(Vector v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::size_t p = pivots[k];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p] / rows[k][p];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(rows[k][j]) != 0) v[j] -= f * rows[k][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(j);
        return true;
      }
    return false;
  }
};

}  // namespace

std::size_t RationalMatrix::rank() const {
  Echelon e;
  for (std::size_t i = 0; i < rows_; ++i) {
    Vector r(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    e.insert(std::move(r));
  }
  return e.rows.size();
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs) {
  Echelon e;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (e.insert(vs[i])) out.push_back(i);
  return out;
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target) {
  // Normal equations G c = B^T t; G is invertible for an independent basis.
  const std::size_t r = basis.size();
  RationalMatrix g(r, r);
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], target);
  }
  Vector c = g.inverse().apply(rhs);
  Vector back = zero_vector(target.size());
  for (std::size_t i = 0; i < r; ++i) back = add(back, scaled(basis[i], c[i]));
  if (back != target) return std::nullopt;
  return c;
}

}  // namespace rootaut

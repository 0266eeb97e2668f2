#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lietemper {

/// Exact rational. GMP keeps it canonical (reduced, positive denominator).
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "3", "-3/2", "+4/6" (reduced on return). Throws Error(ParseError).
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Rat& s, const Vec& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  void set_row(std::size_t r, const Vec& v);

  Matrix transpose() const;
  Rat trace() const;
  bool is_zero() const;
  Vec apply(const Vec& v) const;  // M v

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace lietemper

#pragma once

#include <cstdint>
#include <vector>

#include "graphcap/rational.hpp"

namespace graphcap {

/// Field selector for exact matrices: the rationals, or GF(p) for a prime
/// p < 2^31 (so that products fit in 64 bits).
class FieldTag {
 public:
  static FieldTag rationals() { return FieldTag(0); }
  static FieldTag prime_field(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::int64_t prime() const;

  bool operator==(const FieldTag&) const = default;

 private:
  explicit FieldTag(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;  // 0 means rationals
};

/// Dense matrix over an exact field. Rational entries are always reduced
/// (boost keeps them canonical); GF(p) entries are machine integers in
/// 0..p-1.
class ExactMatrix {
 public:
  ExactMatrix(FieldTag field, int rows, int cols);
  static ExactMatrix identity(FieldTag field, int n);

  FieldTag field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Rational accessors (rationals only).
  const Rational& rat_at(int i, int j) const;
  void set(int i, int j, const Rational& value);

  // GF(p) accessors.
  std::int64_t mod_at(int i, int j) const;
  void set_mod(int i, int j, std::int64_t value);

  /// Works over either field; integers embed canonically.
  void set_int(int i, int j, std::int64_t value);

  bool is_zero(int i, int j) const;
  bool entries_equal(int i, int j, const ExactMatrix& other, int oi, int oj) const;

  ExactMatrix transpose() const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator*(const ExactMatrix& other) const;
  bool operator==(const ExactMatrix& other) const;

 private:
  FieldTag field_;
  int rows_, cols_;
  std::vector<Rational> q_;       // rationals storage
  std::vector<std::int64_t> m_;   // GF(p) storage
  friend int rank_exact(const ExactMatrix&);
};

/// Rank by exact Gaussian elimination; pivoting picks the first nonzero
/// entry in the current column.
int rank_exact(const ExactMatrix& m);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace graphcap

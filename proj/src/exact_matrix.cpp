#include "graphcap/exact_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace graphcap {

std::string to_fraction_string(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  if (exp >= 0) return Rational(num << exp);
  return Rational(num, BigInt(1) << (-exp));
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero element");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldTag FieldTag::prime_field(std::int64_t p) {
  if (p >= (std::int64_t(1) << 31))
    throw std::invalid_argument("prime_field: p must be < 2^31");
  if (!is_prime(p)) throw std::invalid_argument("prime_field: p not prime");
  return FieldTag(p);
}

std::int64_t FieldTag::prime() const {
  if (p_ == 0) throw std::logic_error("FieldTag: rationals have no prime");
  return p_;
}

ExactMatrix::ExactMatrix(FieldTag field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("ExactMatrix: negative dimension");
  if (field_.is_rationals())
    q_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
  else
    m_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

ExactMatrix ExactMatrix::identity(FieldTag field, int n) {
  ExactMatrix out(field, n, n);
  for (int i = 0; i < n; ++i) out.set_int(i, i, 1);
  return out;
}

const Rational& ExactMatrix::rat_at(int i, int j) const {
  if (!field_.is_rationals())
    throw std::logic_error("rat_at: matrix is over GF(p)");
  return q_[static_cast<std::size_t>(i) * cols_ + j];
}

void ExactMatrix::set(int i, int j, const Rational& value) {
  if (!field_.is_rationals())
    throw std::logic_error("set: matrix is over GF(p)");
  q_[static_cast<std::size_t>(i) * cols_ + j] = value;
}

std::int64_t ExactMatrix::mod_at(int i, int j) const {
  if (field_.is_rationals())
    throw std::logic_error("mod_at: matrix is over the rationals");
  return m_[static_cast<std::size_t>(i) * cols_ + j];
}

void ExactMatrix::set_mod(int i, int j, std::int64_t value) {
  if (field_.is_rationals())
    throw std::logic_error("set_mod: matrix is over the rationals");
  m_[static_cast<std::size_t>(i) * cols_ + j] = mod_reduce(value, field_.prime());
}

void ExactMatrix::set_int(int i, int j, std::int64_t value) {
  if (field_.is_rationals())
    set(i, j, Rational(value));
  else
    set_mod(i, j, value);
}

bool ExactMatrix::is_zero(int i, int j) const {
  return field_.is_rationals() ? rat_at(i, j) == 0 : mod_at(i, j) == 0;
}

bool ExactMatrix::entries_equal(int i, int j, const ExactMatrix& other, int oi,
                                int oj) const {
  if (field_ != other.field_) return false;
  return field_.is_rationals() ? rat_at(i, j) == other.rat_at(oi, oj)
                               : mod_at(i, j) == other.mod_at(oi, oj);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (field_.is_rationals())
        out.set(j, i, rat_at(i, j));
      else
        out.set_mod(j, i, mod_at(i, j));
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ExactMatrix+: shape or field mismatch");
  ExactMatrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (field_.is_rationals())
        out.set(i, j, rat_at(i, j) + other.rat_at(i, j));
      else
        out.set_mod(i, j, mod_at(i, j) + other.mod_at(i, j));
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (field_ != other.field_ || cols_ != other.rows_)
    throw std::invalid_argument("ExactMatrix*: shape or field mismatch");
  ExactMatrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      if (field_.is_rationals()) {
        Rational acc(0);
        for (int k = 0; k < cols_; ++k) acc += rat_at(i, k) * other.rat_at(k, j);
        out.set(i, j, acc);
      } else {
        std::int64_t p = field_.prime(), acc = 0;
        for (int k = 0; k < cols_; ++k)
          acc = (acc + mod_mul(mod_at(i, k), other.mod_at(k, j), p)) % p;
        out.set_mod(i, j, acc);
      }
    }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_)
    return false;
  return field_.is_rationals() ? q_ == other.q_ : m_ == other.m_;
}

int rank_exact(const ExactMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  int rank = 0;
  if (m.field().is_rationals()) {
    auto a = m.q_;
    auto at = [&](int i, int j) -> Rational& {
      return a[static_cast<std::size_t>(i) * cols + j];
    };
    for (int col = 0; col < cols && rank < rows; ++col) {
      int pivot = -1;
      for (int r = rank; r < rows; ++r)
        if (at(r, col) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap_ranges(a.begin() + static_cast<std::size_t>(pivot) * cols,
                       a.begin() + static_cast<std::size_t>(pivot + 1) * cols,
                       a.begin() + static_cast<std::size_t>(rank) * cols);
      Rational inv = 1 / at(rank, col);
      for (int r = rank + 1; r < rows; ++r) {
        if (at(r, col) == 0) continue;
        Rational factor = at(r, col) * inv;
        for (int c = col; c < cols; ++c) at(r, c) -= factor * at(rank, c);
      }
      ++rank;
    }
  } else {
    std::int64_t p = m.field().prime();
    auto a = m.m_;
    auto at = [&](int i, int j) -> std::int64_t& {
      return a[static_cast<std::size_t>(i) * cols + j];
    };
    for (int col = 0; col < cols && rank < rows; ++col) {
      int pivot = -1;
      for (int r = rank; r < rows; ++r)
        if (at(r, col) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap_ranges(a.begin() + static_cast<std::size_t>(pivot) * cols,
                       a.begin() + static_cast<std::size_t>(pivot + 1) * cols,
                       a.begin() + static_cast<std::size_t>(rank) * cols);
      std::int64_t inv = mod_inv(at(rank, col), p);
      for (int r = rank + 1; r < rows; ++r) {
        if (at(r, col) == 0) continue;
        std::int64_t factor = mod_mul(at(r, col), inv, p);
        for (int c = col; c < cols; ++c)
          at(r, c) = mod_reduce(at(r, c) - mod_mul(factor, at(rank, c), p), p);
      }
      ++rank;
    }
  }
  return rank;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("kron: field mismatch");
  ExactMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.is_zero(i, j)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (a.field().is_rationals())
            out.set(i * b.rows() + k, j * b.cols() + l,
                    a.rat_at(i, j) * b.rat_at(k, l));
          else
            out.set_mod(i * b.rows() + k, j * b.cols() + l,
                        mod_mul(a.mod_at(i, j), b.mod_at(k, l),
                                a.field().prime()));
        }
    }
  return out;
}

}  // namespace graphcap

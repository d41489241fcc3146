#pragma once

// Exact dense linear algebra over a prime field F_p.  All ranks, kernels,
// images, preimages, sums and quotients used by the homology pipeline are
// computed here; no floating point is involved at any stage.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperph {

bool is_prime(std::uint32_t n);

// Scalar arithmetic in F_p.  Residues are canonical representatives 0..p-1.
struct Fp {
  std::uint32_t p;

  explicit Fp(std::uint32_t modulus);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p);
  }
  std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0
  std::uint32_t reduce(long long v) const;   // canonical residue of any integer
};

// Row-major dense matrix over F_p.  Zero-row and zero-column shapes are legal
// everywhere; they carry the modulus so empty spaces stay well-typed.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static Matrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, long long v);
  Matrix transposed() const;
  Matrix column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);

// Reduced row echelon form; pivots are chosen as the first nonzero entry in
// scan order so the result is deterministic.
struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Columns span {x : m x = 0}; echelonized, deterministic.
Matrix kernel_basis(const Matrix& m);

// Columns span the column space of m; reduced column echelon form.
Matrix image_basis(const Matrix& m);

// Any solution x of a x = b (column-wise).  Throws std::domain_error when a
// column of b is outside the column space of a.
Matrix solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& m);  // throws std::domain_error if singular

// A subspace of F_p^ambient with a canonical (reduced column echelon) basis.
struct Subspace {
  std::size_t ambient;
  Matrix basis;  // ambient x dim

  static Subspace span(const Matrix& vectors);
  static Subspace zero(std::size_t ambient, std::uint32_t p);
  static Subspace full(std::size_t ambient, std::uint32_t p);

  std::size_t dim() const { return basis.cols(); }
  std::uint32_t modulus() const { return basis.modulus(); }
  bool contains(const Matrix& vectors) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);

// {x : m x in w}; w lives in F_p^rows(m).
Subspace preimage_subspace(const Matrix& m, const Subspace& w);

// Quotient V/W for W <= V, in V-coordinates.  projection maps V-coordinates
// onto quotient coordinates (kernel exactly W); section picks representatives,
// projection * section = identity.
struct QuotientMap {
  std::size_t dim;
  Matrix projection;  // dim x dim(V)
  Matrix section;     // dim(V) x dim
};
QuotientMap quotient_map(const Subspace& v, const Subspace& w);

}  // namespace hyperph

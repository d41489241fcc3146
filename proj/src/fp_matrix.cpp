#include "hyperph/fp_matrix.hpp"

#include <stdexcept>
#include <string>

namespace hyperph {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::uint32_t modulus) : p(modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
}

std::uint32_t Fp::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // extended euclid on (a, p)
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t Fp::reduce(long long v) const {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  Fp check(p);  // validates the modulus
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, long long v) {
  (*this)(r, c) = Fp(p_).reduce(v);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix v(rows_, 1, p_);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (std::uint32_t x : data_)
    if (x != 0) return false;
  return true;
}

static void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("matrices over different fields");
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Fp f(a.modulus());
  Matrix c(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::uint32_t v = b(k, j);
        if (v != 0) c(i, j) = f.add(c(i, j), f.mul(aik, v));
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Fp f(a.modulus());
  Matrix c(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  Fp f(a.modulus());
  Matrix c(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Echelon row_reduce(Matrix m) {
  Fp f(m.modulus());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;  // first nonzero pivot
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    std::uint32_t s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::uint32_t t = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::size_t k = m.cols() - e.pivots.size();
  Fp f(m.modulus());
  Matrix basis(m.cols(), k, m.modulus());
  std::size_t out = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, out) = 1;
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
      basis(e.pivots[pr], out) = f.neg(e.m(pr, c));
    ++out;
  }
  return basis;
}

// Reduced column echelon form with zero columns dropped: the canonical basis
// used for every subspace in the library.
static Matrix reduced_column_echelon(const Matrix& m) {
  Echelon e = row_reduce(m.transposed());
  std::size_t r = e.pivots.size();
  Matrix basis(m.rows(), r, m.modulus());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis(j, i) = e.m(i, j);
  return basis;
}

Matrix image_basis(const Matrix& m) { return reduced_column_echelon(m); }

Matrix solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Echelon e = row_reduce(hcat(a, b));
  for (std::size_t c : e.pivots)
    if (c >= a.cols()) throw std::domain_error("solve: inconsistent system");
  Matrix x(a.cols(), b.cols(), a.modulus());
  for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(e.pivots[pr], j) = e.m(pr, a.cols() + j);
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(m) != m.rows()) throw std::domain_error("inverse of singular matrix");
  return solve(m, Matrix::identity(m.rows(), m.modulus()));
}

Subspace Subspace::span(const Matrix& vectors) {
  return {vectors.rows(), reduced_column_echelon(vectors)};
}

Subspace Subspace::zero(std::size_t ambient, std::uint32_t p) {
  return {ambient, Matrix(ambient, 0, p)};
}

Subspace Subspace::full(std::size_t ambient, std::uint32_t p) {
  return {ambient, Matrix::identity(ambient, p)};
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient) throw std::invalid_argument("ambient mismatch");
  return rank(hcat(basis, vectors)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return contains(other.basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch in subspace sum");
  return Subspace::span(hcat(a.basis, b.basis));
}

Subspace preimage_subspace(const Matrix& m, const Subspace& w) {
  if (w.ambient != m.rows()) throw std::invalid_argument("preimage ambient mismatch");
  QuotientMap q = quotient_map(Subspace::full(m.rows(), m.modulus()), w);
  return Subspace::span(kernel_basis(q.projection * m));
}

QuotientMap quotient_map(const Subspace& v, const Subspace& w) {
  if (v.ambient != w.ambient) throw std::invalid_argument("ambient mismatch in quotient");
  if (!v.contains(w)) throw std::invalid_argument("quotient: W is not contained in V");
  std::uint32_t p = v.modulus();
  std::size_t n = v.dim();
  Matrix wv = solve(v.basis, w.basis);  // W in V-coordinates, n x dim(W)
  // Complete W's basis to a basis of F^n by greedily adding standard vectors.
  Matrix b = wv;
  std::vector<std::size_t> added;
  std::size_t r = rank(b);
  for (std::size_t j = 0; j < n && r < n; ++j) {
    Matrix ej(n, 1, p);
    ej(j, 0) = 1;
    Matrix cand = hcat(b, ej);
    if (rank(cand) > r) {
      b = std::move(cand);
      added.push_back(j);
      ++r;
    }
  }
  std::size_t q = added.size();
  Matrix binv = inverse(b);
  Matrix projection(q, n, p);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) projection(i, j) = binv(w.dim() + i, j);
  Matrix section(n, q, p);
  for (std::size_t i = 0; i < q; ++i) section(added[i], i) = 1;
  return {q, std::move(projection), std::move(section)};
}

}  // namespace hyperph

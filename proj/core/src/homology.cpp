#include "betti/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

ExponentMatrix exponent_matrix(const Presentation& pres) {
  ExponentMatrix m(pres.relator_count(), pres.generator_count());
  for (std::size_t i = 0; i < pres.relator_count(); ++i)
    for (Letter l : pres.relators()[i])
      m.at(i, generator_of(l)) += is_inverse(l) ? -1 : 1;
  return m;
}

std::vector<mpz_class> AbelianInvariants::nontrivial_divisors() const {
  std::vector<mpz_class> out;
  for (const auto& d : divisors)
    if (d != 1) out.push_back(d);
  return out;
}

std::size_t AbelianInvariants::p_rank(const mpz_class& p) const {
  std::size_t k = rank;
  for (const auto& d : divisors)
    if (d % p == 0) ++k;
  return k;
}

namespace {

// Square matrix as flat row-major storage, used for the transform tracking.
struct Square {
  std::size_t n = 0;
  std::vector<mpz_class> a;
  static Square identity(std::size_t n) {
    Square s;
    s.n = n;
    s.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) s.a[i * n + i] = 1;
    return s;
  }
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

class SmithWorker {
public:
  SmithWorker(const ExponentMatrix& m, SmithTransforms* tf)
      : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_), tf_(tf) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = m.at(i, j);
    if (tf_) {
      u_ = Square::identity(rows_);
      v_ = Square::identity(cols_);
    }
  }

  AbelianInvariants run() {
    std::size_t s = 0;
    const std::size_t nmin = std::min(rows_, cols_);
    while (s < nmin) {
      if (!move_min_pivot(s)) break;
      clear(s);
      if (at(s, s) < 0) negate_row(s);
      ++s;
    }
    AbelianInvariants inv;
    for (std::size_t k = 0; k < s; ++k) inv.divisors.push_back(at(k, k));
    inv.rank = cols_ - s;
    if (tf_) {
      tf_->rows = rows_;
      tf_->cols = cols_;
      tf_->u = std::move(u_.a);
      tf_->v = std::move(v_.a);
    }
    return inv;
  }

private:
  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  // Moves the nonzero entry of least absolute value in the trailing submatrix
  // to (s, s). Returns false if the submatrix is zero.
  bool move_min_pivot(std::size_t s) {
    std::size_t pi = s, pj = s;
    mpz_class best = 0;
    for (std::size_t i = s; i < rows_; ++i)
      for (std::size_t j = s; j < cols_; ++j) {
        if (at(i, j) == 0) continue;
        mpz_class v = abs(at(i, j));
        if (best == 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) return false;
    swap_rows(s, pi);
    swap_cols(s, pj);
    return true;
  }

  // Clears row s and column s with the pivot at (s, s), then enforces that the
  // pivot divides the trailing submatrix. Truncated division keeps remainders
  // below the pivot, so every swap strictly shrinks it.
  void clear(std::size_t s) {
    while (true) {
      bool dirty = false;
      for (std::size_t i = s + 1; i < rows_; ++i) {
        if (at(i, s) == 0) continue;
        mpz_class q = at(i, s) / at(s, s); // truncated
        if (q != 0) add_row(i, s, -q);
        if (at(i, s) != 0) {
          swap_rows(s, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      for (std::size_t j = s + 1; j < cols_; ++j) {
        if (at(s, j) == 0) continue;
        mpz_class q = at(s, j) / at(s, s);
        if (q != 0) add_col(j, s, -q);
        if (at(s, j) != 0) {
          swap_cols(s, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // row and column are clear; check divisibility of the rest
      bool fixed = false;
      for (std::size_t i = s + 1; i < rows_ && !fixed; ++i)
        for (std::size_t j = s + 1; j < cols_ && !fixed; ++j)
          if (at(i, j) % at(s, s) != 0) {
            add_row(s, i, 1);
            fixed = true;
          }
      if (!fixed) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    if (tf_)
      for (std::size_t k = 0; k < rows_; ++k) std::swap(u_.at(i, k), u_.at(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    if (tf_)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(v_.at(k, i), v_.at(k, j));
  }

  void add_row(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
    if (tf_)
      for (std::size_t k = 0; k < rows_; ++k) u_.at(dst, k) += factor * u_.at(src, k);
  }

  void add_col(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
    if (tf_)
      for (std::size_t k = 0; k < cols_; ++k) v_.at(k, dst) += factor * v_.at(k, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    if (tf_)
      for (std::size_t k = 0; k < rows_; ++k) u_.at(i, k) = -u_.at(i, k);
  }

  std::size_t rows_, cols_;
  std::vector<mpz_class> a_;
  SmithTransforms* tf_;
  Square u_, v_;
};

} // namespace

AbelianInvariants smith_normal_form(const ExponentMatrix& m) {
  SmithWorker w(m, nullptr);
  return w.run();
}

AbelianInvariants smith_normal_form(const ExponentMatrix& m, SmithTransforms& transforms) {
  SmithWorker w(m, &transforms);
  return w.run();
}

bool is_prime(unsigned long p) {
  mpz_class z = static_cast<unsigned long>(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

long b1(const Presentation& pres) {
  return static_cast<long>(smith_normal_form(exponent_matrix(pres)).rank);
}

namespace {

long mod_p_rank(const ExponentMatrix& m, unsigned long p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<long> a(rows * cols);
  const mpz_class pz = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class r = m.at(i, j) % pz;
      if (r < 0) r += pz;
      a[i * cols + j] = r.get_si();
    }
  const long lp = static_cast<long>(p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t k = 0; k < cols; ++k)
      std::swap(a[rank * cols + k], a[piv * cols + k]);
    // normalize pivot to 1
    long inv = 1, base = a[rank * cols + col], e = lp - 2;
    for (long acc = base; e > 0; e >>= 1) {
      if (e & 1) inv = (inv * acc) % lp;
      acc = (acc * acc) % lp;
    }
    for (std::size_t k = col; k < cols; ++k)
      a[rank * cols + k] = (a[rank * cols + k] * inv) % lp;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i * cols + col] == 0) continue;
      long f = a[i * cols + col];
      for (std::size_t k = col; k < cols; ++k)
        a[i * cols + k] = ((a[i * cols + k] - f * a[rank * cols + k]) % lp + lp) % lp;
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

} // namespace

long b1_mod_p(const Presentation& pres, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p >= (1ul << 31)) throw std::invalid_argument("prime too large for mod-p elimination");
  ExponentMatrix m = exponent_matrix(pres);
  return static_cast<long>(pres.generator_count()) - mod_p_rank(m, p);
}

} // namespace betti

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "betti/words.hpp"

namespace betti {

/// Relators-by-generators matrix of exponent sums.
class ExponentMatrix {
public:
  ExponentMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const ExponentMatrix&) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> data_;
};

ExponentMatrix exponent_matrix(const Presentation& pres);

/// Unimodular U (rows x rows) and V (cols x cols) with U * M * V diagonal.
struct SmithTransforms {
  std::vector<mpz_class> u, v; // row-major square matrices
  std::size_t rows = 0, cols = 0;
  const mpz_class& u_at(std::size_t i, std::size_t j) const { return u[i * rows + j]; }
  const mpz_class& v_at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

/// Elementary divisors d1 | d2 | ... (all of them, including 1s) plus the free
/// rank of the cokernel; p_rank(p) = rank + #{divisors divisible by p}.
struct AbelianInvariants {
  std::vector<mpz_class> divisors;
  std::size_t rank = 0;

  std::vector<mpz_class> nontrivial_divisors() const;
  std::size_t p_rank(const mpz_class& p) const;
};

AbelianInvariants smith_normal_form(const ExponentMatrix& m);
AbelianInvariants smith_normal_form(const ExponentMatrix& m, SmithTransforms& transforms);

bool is_prime(unsigned long p);

/// Rational rank of the abelianization (first betti number).
long b1(const Presentation& pres);

/// dim H1(.; F_p) = generator count - rank of the exponent matrix over F_p.
/// Rejects composite p.
long b1_mod_p(const Presentation& pres, unsigned long p);

} // namespace betti

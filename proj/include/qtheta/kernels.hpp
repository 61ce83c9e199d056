#pragma once

#include <cstddef>

#include <gmpxx.h>

// In-place coefficient loops behind Series. Arrays are dense, index 0 is the
// lowest stored exponent.
namespace qtheta::kernel {

// c <- c * (1 - sign x^step), keeping the first n entries.
void times_binomial(mpz_class* c, std::size_t n, std::size_t step, int sign);

// c <- c / (1 - sign x^step), keeping the first n entries.
void divide_binomial(mpz_class* c, std::size_t n, std::size_t step, int sign);

// out[k] += sum_{i+j=k} a[i] b[j] for k < n_out. Zero entries of a are skipped,
// so put the sparser operand first.
void convolve(mpz_class* out, std::size_t n_out, const mpz_class* a, std::size_t na, const mpz_class* b,
              std::size_t nb);

// r = 1/a for a[0] = +-1, first n entries.
void invert_unit(mpz_class* r, const mpz_class* a, std::size_t n);

}  // namespace qtheta::kernel

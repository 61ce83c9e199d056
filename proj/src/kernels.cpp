#include "qtheta/kernels.hpp"

#include <algorithm>
#include <vector>

namespace qtheta::kernel {

void times_binomial(mpz_class* c, std::size_t n, std::size_t step, int sign) {
    if (step >= n) return;
    for (std::size_t k = n; k-- > step;) {
        if (sign > 0)
            mpz_sub(c[k].get_mpz_t(), c[k].get_mpz_t(), c[k - step].get_mpz_t());
        else
            mpz_add(c[k].get_mpz_t(), c[k].get_mpz_t(), c[k - step].get_mpz_t());
    }
}

void divide_binomial(mpz_class* c, std::size_t n, std::size_t step, int sign) {
    for (std::size_t k = step; k < n; ++k) {
        if (sign > 0)
            mpz_add(c[k].get_mpz_t(), c[k].get_mpz_t(), c[k - step].get_mpz_t());
        else
            mpz_sub(c[k].get_mpz_t(), c[k].get_mpz_t(), c[k - step].get_mpz_t());
    }
}

void convolve(mpz_class* out, std::size_t n_out, const mpz_class* a, std::size_t na, const mpz_class* b,
              std::size_t nb) {
    for (std::size_t i = 0; i < na && i < n_out; ++i) {
        if (sgn(a[i]) == 0) continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        const std::size_t lim = std::min(nb, n_out - i);
        if (mpz_cmp_ui(ai, 1) == 0) {
            for (std::size_t j = 0; j < lim; ++j) mpz_add(out[i + j].get_mpz_t(), out[i + j].get_mpz_t(), b[j].get_mpz_t());
        } else if (mpz_cmp_si(ai, -1) == 0) {
            for (std::size_t j = 0; j < lim; ++j) mpz_sub(out[i + j].get_mpz_t(), out[i + j].get_mpz_t(), b[j].get_mpz_t());
        } else {
            for (std::size_t j = 0; j < lim; ++j) mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
}

void invert_unit(mpz_class* r, const mpz_class* a, std::size_t n) {
    if (n == 0) return;
    const bool neg = sgn(a[0]) < 0;
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < n; ++j)
        if (sgn(a[j]) != 0) nz.push_back(j);
    r[0] = a[0];
    mpz_class acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t j : nz) {
            if (j > k) break;
            mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), r[k - j].get_mpz_t());
        }
        // r_k = -a_0 * acc since a_0^{-1} = a_0
        if (neg)
            r[k] = acc;
        else
            r[k] = -acc;
    }
}

}  // namespace qtheta::kernel

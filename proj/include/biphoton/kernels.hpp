#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

// Dense kernels behind the quadrature oracles. Each kernel ships in two forms:
// a serial reference and an OpenMP version. Both evaluate every output element
// with the same fixed-order inner loop, so results are bitwise identical for
// any thread count; tests assert that and tools/bench compares their speed.

namespace biphoton::kern {

// Split-complex matrix, row-major, rows() x cols().
struct ZMatrix {
  std::vector<double> re, im;
  std::size_t n_rows = 0, n_cols = 0;

  void resize(std::size_t r, std::size_t c) {
    n_rows = r;
    n_cols = c;
    re.assign(r * c, 0.0);
    im.assign(r * c, 0.0);
  }
  std::complex<double> at(std::size_t r, std::size_t c) const {
    return {re[r * n_cols + c], im[r * n_cols + c]};
  }
  void set(std::size_t r, std::size_t c, std::complex<double> z) {
    re[r * n_cols + c] = z.real();
    im[r * n_cols + c] = z.imag();
  }
};

// Row-dot contraction: out[r, s] = sum_i x[r, i] * y[s, i] (no conjugation).
// x: (R x K), y: (S x K), out: (R x S).
void zrowdot_serial(const ZMatrix& x, const ZMatrix& y, ZMatrix& out);
void zrowdot_parallel(const ZMatrix& x, const ZMatrix& y, ZMatrix& out);

// Plain triple loop without SIMD hints; value reference for the blocked kernels.
void zrowdot_naive(const ZMatrix& x, const ZMatrix& y, ZMatrix& out);

// Row-wise fill: fn(r) computes row r of a row-major table in place.
void fill_rows_serial(std::size_t n_rows, const std::function<void(std::size_t)>& fn);
void fill_rows_parallel(std::size_t n_rows, const std::function<void(std::size_t)>& fn);

// Fixed-order (ascending index) sums; deterministic regardless of caller threads.
double sum_serial(const double* x, std::size_t n);
std::complex<double> zsum_serial(const double* re, const double* im, std::size_t n);

}  // namespace biphoton::kern

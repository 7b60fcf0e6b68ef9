#include "biphoton/kernels.hpp"

#include <omp.h>

namespace biphoton::kern {

namespace {

// 8 flops per element, fixed ascending-i order. Shared by the serial and the
// parallel entry points so both produce identical bits.
inline void dot_block(const double* xr, const double* xi, const double* yr, const double* yi,
                      std::size_t k, double& out_re, double& out_im) {
  double sr = 0.0, si = 0.0;
#pragma omp simd reduction(+ : sr, si)
  for (std::size_t i = 0; i < k; ++i) {
    sr += xr[i] * yr[i] - xi[i] * yi[i];
    si += xr[i] * yi[i] + xi[i] * yr[i];
  }
  out_re = sr;
  out_im = si;
}

constexpr std::size_t tile = 8;

inline void rowdot_tile(const ZMatrix& x, const ZMatrix& y, ZMatrix& out, std::size_t rb,
                        std::size_t re_end) {
  const std::size_t k = x.n_cols;
  const std::size_t s_count = y.n_rows;
  for (std::size_t sb = 0; sb < s_count; sb += tile) {
    const std::size_t se = sb + tile < s_count ? sb + tile : s_count;
    for (std::size_t r = rb; r < re_end; ++r) {
      const double* xr = x.re.data() + r * k;
      const double* xi = x.im.data() + r * k;
      for (std::size_t s = sb; s < se; ++s) {
        dot_block(xr, xi, y.re.data() + s * k, y.im.data() + s * k, k,
                  out.re[r * s_count + s], out.im[r * s_count + s]);
      }
    }
  }
}

}  // namespace

void zrowdot_serial(const ZMatrix& x, const ZMatrix& y, ZMatrix& out) {
  out.resize(x.n_rows, y.n_rows);
  for (std::size_t rb = 0; rb < x.n_rows; rb += tile)
    rowdot_tile(x, y, out, rb, rb + tile < x.n_rows ? rb + tile : x.n_rows);
}

void zrowdot_parallel(const ZMatrix& x, const ZMatrix& y, ZMatrix& out) {
  out.resize(x.n_rows, y.n_rows);
  const std::size_t n = x.n_rows;
#pragma omp parallel for schedule(static)
  for (std::size_t rb = 0; rb < n; rb += tile)
    rowdot_tile(x, y, out, rb, rb + tile < n ? rb + tile : n);
}

void zrowdot_naive(const ZMatrix& x, const ZMatrix& y, ZMatrix& out) {
  out.resize(x.n_rows, y.n_rows);
  const std::size_t k = x.n_cols;
  for (std::size_t r = 0; r < x.n_rows; ++r) {
    for (std::size_t s = 0; s < y.n_rows; ++s) {
      double sr = 0.0, si = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        const double a = x.re[r * k + i], b = x.im[r * k + i];
        const double c = y.re[s * k + i], d = y.im[s * k + i];
        sr += a * c - b * d;
        si += a * d + b * c;
      }
      out.re[r * y.n_rows + s] = sr;
      out.im[r * y.n_rows + s] = si;
    }
  }
}

void fill_rows_serial(std::size_t n_rows, const std::function<void(std::size_t)>& fn) {
  for (std::size_t r = 0; r < n_rows; ++r) fn(r);
}

void fill_rows_parallel(std::size_t n_rows, const std::function<void(std::size_t)>& fn) {
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < n_rows; ++r) fn(r);
}

double sum_serial(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

std::complex<double> zsum_serial(const double* re, const double* im, std::size_t n) {
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sr += re[i];
    si += im[i];
  }
  return {sr, si};
}

}  // namespace biphoton::kern

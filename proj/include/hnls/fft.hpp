#pragma once

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <span>

#include "hnls/types.hpp"

namespace hnls {

namespace detail {
// The FFTW planner is not re-entrant; execution on distinct plans is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// Smallest 7-smooth integer >= n (fast FFTW sizes).
inline std::size_t good_fft_size(std::size_t n) {
  for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
    std::size_t r = m;
    for (std::size_t p : {2u, 3u, 5u, 7u})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

/// In-place M x M complex FFT on an owned buffer.
///
/// forward():  X[k] = sum_j x[j] e^{-2 pi i j.k / M}
/// backward(): x[j] = sum_k X[k] e^{+2 pi i j.k / M}   (unnormalised)
class Fft2d {
 public:
  explicit Fft2d(std::size_t m) : m_(m) {
    require(m >= 1, "FFT size must be positive");
    std::lock_guard lock(detail::fftw_planner_mutex());
    buf_ = fftw_alloc_complex(m * m);
    const int n = static_cast<int>(m);
    fwd_ = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Fft2d() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }

  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  std::size_t size() const { return m_; }

  std::span<Complex> data() { return {reinterpret_cast<Complex*>(buf_), m_ * m_}; }
  std::span<const Complex> data() const { return {reinterpret_cast<const Complex*>(buf_), m_ * m_}; }

  Complex& at(std::size_t j, std::size_t k) { return data()[j * m_ + k]; }

  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }

 private:
  std::size_t m_;
  fftw_complex* buf_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

}  // namespace hnls

// statgeo - parallel sweep kernels
//
// Point sweeps, ray fans and residual reductions are data-parallel: every
// iteration evaluates pure functions of immutable inputs. The OpenMP path
// and the serial reference path run the same per-index code, so results are
// bit-identical (max-reductions are order-independent).

#ifndef STATGEO_SWEEP_HPP_
#define STATGEO_SWEEP_HPP_

#include <algorithm>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace statgeo {

enum class ExecMode { serial, parallel };

inline int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// fn(i) for i in [0, count). An exception thrown by any iteration is captured
// and rethrown after the region (throwing across an OpenMP boundary would
// terminate).
template <class Fn>
void sweep_for(int count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
#endif
  }
  for (int i = 0; i < count; ++i) fn(i);
}

// max over fn(i)
template <class Fn>
double sweep_max(int count, ExecMode mode, Fn&& fn) {
  double result = 0.0;
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    std::exception_ptr error;
#pragma omp parallel
    {
      double local = 0.0;
#pragma omp for schedule(dynamic) nowait
      for (int i = 0; i < count; ++i) {
        try {
          local = std::max(local, fn(i));
        } catch (...) {
#pragma omp critical
          if (!error) error = std::current_exception();
        }
      }
#pragma omp critical
      result = std::max(result, local);
    }
    if (error) std::rethrow_exception(error);
    return result;
#endif
  }
  for (int i = 0; i < count; ++i) result = std::max(result, fn(i));
  return result;
}

// map into a preallocated vector of results
template <class T, class Fn>
std::vector<T> sweep_map(int count, ExecMode mode, Fn&& fn) {
  std::vector<T> out(count);
  sweep_for(count, mode, [&](int i) { out[i] = fn(i); });
  return out;
}

}  // namespace statgeo

#endif

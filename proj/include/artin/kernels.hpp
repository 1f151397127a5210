#pragma once

#include "artin/execution.hpp"

#include <cstddef>
#include <exception>
#include <vector>

namespace artin {

/// out[i] = fn(i) for i < n. The parallel variant distributes indices over
/// OpenMP threads; each slot is written by exactly one thread, so the result is
/// identical to the serial loop. The first exception thrown is rethrown.
template <class T, class Fn>
std::vector<T> tabulate(std::size_t n, Fn &&fn, Execution exec) {
  std::vector<T> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = fn(i);
    return out;
  }
  const long long count = static_cast<long long>(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(artin_tabulate_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

} // namespace artin

#include "crystal_poly/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace crystal_poly {

int worker_count() {
  const char* env = std::getenv("CRYSTAL_POLY_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  int v = 1;
  try {
    v = std::stoi(env);
  } catch (...) {
    return 1;
  }
  int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::clamp(v, 1, hw * 4);
}

void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t, int)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || count < 64) {
    fn(0, count, 0);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, count);
  const std::size_t chunk = (count + w - 1) / w;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (std::size_t t = 0; t < w; ++t) {
    std::size_t b = t * chunk;
    std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, &errors, b, e, t] {
      try {
        fn(b, e, static_cast<int>(t));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace crystal_poly

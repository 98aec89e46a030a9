#include "chordarc/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace chordarc {

std::size_t worker_count() {
  if (const char* env = std::getenv("CHORDARC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void run_workers(std::size_t workers, const std::function<void(std::size_t)>& task) {
  if (workers <= 1) {
    task(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&task, w] { task(w); });
}

}  // namespace chordarc

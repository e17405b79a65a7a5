#include "ribbonrec/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ribbonrec {

int thread_count() {
  const char* env = std::getenv("RIBBONREC_THREADS");
  if (!env) return 1;
  try {
    int n = std::stoi(env);
    return n < 1 ? 1 : n;
  } catch (...) {
    return 1;
  }
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  int workers = thread_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(error_lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ribbonrec

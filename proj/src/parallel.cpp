#include "qgc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qgc {

namespace {
std::atomic<unsigned> g_threads{0};

unsigned default_threads() {
  if (const char* env = std::getenv("QGC_THREADS")) {
    try {
      unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}
}  // namespace

unsigned thread_count() {
  unsigned t = g_threads.load();
  return t ? t : default_threads();
}

void set_thread_count(unsigned n) { g_threads = n; }

}  // namespace qgc

#include "schur6/parallel.hpp"

namespace schur6 {

namespace {
std::atomic<int> g_jobs{0};  // 0 = all cores
}

void set_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int effective_jobs() {
  const int j = g_jobs.load();
  if (j > 0) return j;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace schur6

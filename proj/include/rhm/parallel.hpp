#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace rhm {

/// Upper bound on worker threads used by hull construction and the bench
/// harness. Results never depend on this value.
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Runs body(begin, end) over a static partition of [0, count). Blocks until
/// every chunk has finished; the first exception thrown by a chunk is
/// rethrown on the calling thread.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Neumaier-compensated running sum.
class CompensatedSum {
  public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

  private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Compensated sum in index order.
double ordered_sum(std::span<const double> xs);

}  // namespace rhm

#pragma once

namespace cdom {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { Serial, Parallel };

/// Caps OpenMP parallelism (n <= 0 restores the runtime default).
void set_thread_count(int n);
int thread_count();

}  // namespace cdom

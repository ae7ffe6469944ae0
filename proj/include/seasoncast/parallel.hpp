#pragma once

namespace seasoncast {

/// Execution mode for the data-parallel kernels. Every parallel kernel has a
/// serial twin producing bitwise-identical output; tests compare the two.
enum class Exec {
    serial,
    parallel,
};

/// Effective thread budget: OpenMP's default, capped by the
/// SEASONCAST_THREADS environment variable when set to a positive integer.
int max_threads();

} // namespace seasoncast

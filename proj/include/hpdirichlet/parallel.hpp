#pragma once

#include <cstddef>
#include <functional>

namespace hpd {

// Worker count is a speed knob only. Work is split into chunks whose count
// and boundaries never depend on the thread count, partial results live in
// per-chunk slots, and callers combine them in ascending chunk order.
void set_max_threads(int n);  // n <= 0 restores the hardware default
int max_threads();

void for_each_chunk(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

}  // namespace hpd

#include "qseries/series.hpp"

#include <atomic>

namespace qseries {

namespace {
std::atomic<ConvMode> g_mode{ConvMode::automatic};
}

ConvMode conv_mode() noexcept { return g_mode.load(std::memory_order_relaxed); }
void set_conv_mode(ConvMode m) noexcept { g_mode.store(m, std::memory_order_relaxed); }

} // namespace qseries

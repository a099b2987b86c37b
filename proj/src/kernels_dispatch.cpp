#include "shellga/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace shellga::kernels {

namespace {

Impl detect() noexcept
{
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return Impl::avx2;
#endif
    return Impl::scalar;
}

std::atomic<Impl> g_impl{detect()};

} // namespace

bool avx2_supported() noexcept
{
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl active() noexcept { return g_impl.load(std::memory_order_relaxed); }

const char* name(Impl impl) noexcept
{
    switch (impl) {
    case Impl::scalar: return "scalar";
    case Impl::avx2:   return "avx2";
    }
    return "unknown";
}

void select(Impl impl)
{
    if (impl == Impl::avx2 && !avx2_supported())
        throw std::invalid_argument("avx2 kernel not supported on this CPU");
    g_impl.store(impl, std::memory_order_relaxed);
}

void geometric_product(const double* a, const double* b, double* out) noexcept
{
#if defined(__x86_64__) || defined(_M_X64)
    if (g_impl.load(std::memory_order_relaxed) == Impl::avx2) {
        geometric_product_avx2(a, b, out);
        return;
    }
#endif
    geometric_product_scalar(a, b, out);
}

} // namespace shellga::kernels

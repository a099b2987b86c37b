#pragma once

// Low-level multivector product kernels.
//
// A multivector over Euclidean 3-space is stored as 8 doubles in the blade
// order {1, e1, e2, e3, e12, e13, e23, e123}.  The geometric product is the
// one dense inner loop of the whole library, so it comes in two equivalent
// implementations: a scalar reference kernel and an AVX2 variant.  The two
// perform the same operations in the same order and produce bit-identical
// results; the dispatcher picks the widest one the CPU supports.

namespace shellga::kernels {

enum class Impl { scalar, avx2 };

// Reference kernel. `out` may alias `a` or `b`.
void geometric_product_scalar(const double* a, const double* b, double* out) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
// AVX2 variant; call only when avx2_supported() is true.
void geometric_product_avx2(const double* a, const double* b, double* out) noexcept;
#endif

bool avx2_supported() noexcept;

// Currently selected implementation (chosen once from CPU features,
// overridable for tests).
Impl active() noexcept;
const char* name(Impl) noexcept;

// Force a specific kernel. Throws std::invalid_argument if the requested
// kernel is not supported on this machine.
void select(Impl);

// Dispatched product used by the Multivector type.
void geometric_product(const double* a, const double* b, double* out) noexcept;

} // namespace shellga::kernels

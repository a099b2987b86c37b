#include "shellga/kernels.hpp"

namespace shellga::kernels {

// Expanded Cayley table for the orthonormal basis {1,e1,e2,e3,e12,e13,e23,e123}.
// Each output is accumulated strictly left to right in ascending index of `a`;
// the AVX2 kernel mirrors this order so both produce identical bits.
void geometric_product_scalar(const double* a, const double* b, double* out) noexcept
{
    const double r0 = a[0]*b[0] + a[1]*b[1] + a[2]*b[2] + a[3]*b[3]
                    - a[4]*b[4] - a[5]*b[5] - a[6]*b[6] - a[7]*b[7];
    const double r1 = a[0]*b[1] + a[1]*b[0] - a[2]*b[4] - a[3]*b[5]
                    + a[4]*b[2] + a[5]*b[3] - a[6]*b[7] - a[7]*b[6];
    const double r2 = a[0]*b[2] + a[1]*b[4] + a[2]*b[0] - a[3]*b[6]
                    - a[4]*b[1] + a[5]*b[7] + a[6]*b[3] + a[7]*b[5];
    const double r3 = a[0]*b[3] + a[1]*b[5] + a[2]*b[6] + a[3]*b[0]
                    - a[4]*b[7] - a[5]*b[1] - a[6]*b[2] - a[7]*b[4];
    const double r4 = a[0]*b[4] + a[1]*b[2] - a[2]*b[1] + a[3]*b[7]
                    + a[4]*b[0] - a[5]*b[6] + a[6]*b[5] + a[7]*b[3];
    const double r5 = a[0]*b[5] + a[1]*b[3] - a[2]*b[7] - a[3]*b[1]
                    + a[4]*b[6] + a[5]*b[0] - a[6]*b[4] - a[7]*b[2];
    const double r6 = a[0]*b[6] + a[1]*b[7] + a[2]*b[3] - a[3]*b[2]
                    - a[4]*b[5] + a[5]*b[4] + a[6]*b[0] + a[7]*b[1];
    const double r7 = a[0]*b[7] + a[1]*b[6] - a[2]*b[5] + a[3]*b[4]
                    + a[4]*b[3] - a[5]*b[2] + a[6]*b[1] + a[7]*b[0];
    out[0] = r0; out[1] = r1; out[2] = r2; out[3] = r3;
    out[4] = r4; out[5] = r5; out[6] = r6; out[7] = r7;
}

} // namespace shellga::kernels

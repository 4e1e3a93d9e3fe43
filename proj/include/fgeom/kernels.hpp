#pragma once

#include <cstddef>
#include <cstdint>

namespace fgeom::kern {

// Batch kernels over packed GF(2) vectors (one uint32 per vector).
//
//   dot_parity: out[i] = popcount(mask & v[i]) mod 2
//   quad_eval:  out[i] = sum_{j<=k} U[j][k] v_j v_k mod 2, rows[j] holding
//               the coefficient bits U[j][k] for k >= j
//   matvec:     out[i] = xor of cols[j] over the set bits j of v[i]
//
// Every variant must produce bit-identical output; tests compare the
// selected table against the scalar reference on random batches.
struct KernelTable {
    const char* name;
    void (*dot_parity)(uint32_t mask, const uint32_t* v, size_t n, uint8_t* out);
    void (*quad_eval)(const uint32_t* rows, int dim, const uint32_t* v, size_t n, uint8_t* out);
    void (*matvec)(const uint32_t* cols, int dim, const uint32_t* v, size_t n, uint32_t* out);
};

const KernelTable& scalar_table();
// Null when the binary lacks AVX2 code or the CPU lacks the feature.
const KernelTable* avx2_table();

enum class Dispatch { Auto, Scalar, Avx2 };

// Selects the table used by active(); Avx2 throws if unavailable.
void set_dispatch(Dispatch d);
Dispatch dispatch();

const KernelTable& active();

}  // namespace fgeom::kern

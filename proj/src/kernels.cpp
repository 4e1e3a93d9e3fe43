#include "fgeom/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace fgeom::kern {

namespace {

void dot_parity_scalar(uint32_t mask, const uint32_t* v, size_t n, uint8_t* out) {
    for (size_t i = 0; i < n; ++i) {
        out[i] = uint8_t(std::popcount(mask & v[i]) & 1);
    }
}

void quad_eval_scalar(const uint32_t* rows, int dim, const uint32_t* v, size_t n, uint8_t* out) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t x = v[i];
        uint32_t acc = 0;
        for (int j = 0; j < dim; ++j) {
            acc ^= ((x >> j) & 1u) & uint32_t(std::popcount(rows[j] & x));
        }
        out[i] = uint8_t(acc & 1u);
    }
}

void matvec_scalar(const uint32_t* cols, int dim, const uint32_t* v, size_t n, uint32_t* out) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t x = v[i];
        uint32_t y = 0;
        for (int j = 0; j < dim; ++j) {
            y ^= cols[j] & (0u - ((x >> j) & 1u));
        }
        out[i] = y;
    }
}

constexpr KernelTable kScalar{"scalar", dot_parity_scalar, quad_eval_scalar, matvec_scalar};

std::atomic<Dispatch> g_dispatch{Dispatch::Auto};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

void set_dispatch(Dispatch d) {
    if (d == Dispatch::Avx2 && avx2_table() == nullptr) {
        throw std::runtime_error("kernels: AVX2 not available on this host");
    }
    g_dispatch.store(d, std::memory_order_relaxed);
}

Dispatch dispatch() { return g_dispatch.load(std::memory_order_relaxed); }

const KernelTable& active() {
    switch (g_dispatch.load(std::memory_order_relaxed)) {
        case Dispatch::Scalar: return kScalar;
        case Dispatch::Avx2: return *avx2_table();
        case Dispatch::Auto:
        default: {
            const KernelTable* t = avx2_table();
            return t ? *t : kScalar;
        }
    }
}

}  // namespace fgeom::kern

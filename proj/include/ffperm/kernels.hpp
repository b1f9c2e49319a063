#pragma once

// Inner loop of the exhaustive sweep: for a run of constant terms d, OR together per-point
// bitmask lookups indexed by (partial_j XOR d). Scalar reference plus an AVX2 gather variant,
// chosen at runtime.

#include <cstddef>
#include <cstdint>

namespace ffperm::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
// Best variant the running CPU supports.
Isa detect_isa();
bool isa_available(Isa isa);

// out[i] = OR_{j < npts} tables[j * stride + (partial[j] ^ (d0 + i))] for i < n.
// Every index must be < stride.
void mu_mask_xor(Isa isa, const std::uint32_t* tables, std::size_t stride, const std::uint32_t* partial,
                 std::size_t npts, std::uint32_t d0, std::size_t n, std::uint32_t* out);

void mu_mask_xor_scalar(const std::uint32_t* tables, std::size_t stride, const std::uint32_t* partial,
                        std::size_t npts, std::uint32_t d0, std::size_t n, std::uint32_t* out);

}  // namespace ffperm::kernels

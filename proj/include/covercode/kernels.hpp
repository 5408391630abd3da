#pragma once
// Word-level kernels behind the dense bitsets used as the universal set
// representation. Each operation has a scalar reference implementation and,
// where the hardware supports it, a SIMD variant (AVX2 on x86-64, NEON on
// aarch64). The backend is selected once at startup; tests force-select the
// scalar backend to cross-check the vector ones.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace covercode::kernels {

struct Backend {
    const char* name;
    // dst |= src
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst |= src, returns popcount(src & ~dst_before)
    std::uint64_t (*or_count_new)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    std::uint64_t (*popcount)(const std::uint64_t* p, std::size_t n);
    // popcount(a & ~b)
    std::uint64_t (*andnot_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const Backend& scalar_backend();
const Backend& active_backend();

// Force a backend by name ("scalar", "avx2", "neon"). Returns false and keeps
// the current backend if the requested one is unavailable on this machine.
bool select_backend(std::string_view name);
std::string_view active_backend_name();

// Names of every backend usable on this machine (always includes "scalar").
std::vector<std::string_view> available_backends();

}  // namespace covercode::kernels

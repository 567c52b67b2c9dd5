#pragma once

// Batch kernels for the class-space sweeps: the Theorem-1 certificate pair
// (lhs, rhs) and the class-space Napoleonization. A scalar reference kernel
// is always available; an AVX2+FMA variant is selected at runtime on x86-64
// hardware that supports it. The variants are equivalence-tested against
// each other, and the scalar path shares its per-class core with the
// napoleon module.

#include <cstddef>
#include <string>

namespace hypnap::kernels {

enum class Backend { scalar, avx2 };

const char* to_string(Backend b) noexcept;

/// True if the backend can run on this machine (scalar always can).
bool available(Backend b) noexcept;

/// Best available backend, honoring the HYPNAP_BACKEND environment
/// variable ("scalar", "avx2", "auto") when set.
Backend pick_backend() noexcept;

/// Certificate identity evaluation for n classes:
///   lhs[i] = alpha^2 (d0+d1+d2 - d0 d1 d2)^2 - chi^2 (1 - d0 d1 - d1 d2 - d2 d0)^2
///   rhs[i] = gamma/24 * ((d0-d1)^2 + (d1-d2)^2 + (d2-d0)^2)
///                     * (d0^2+d1^2+d2^2 + d0 d1 + d1 d2 + d2 d0 - 2)
///   rad[i] = chi radicand (realizability filter; rad may be null)
/// lhs uses double-double internally; rhs has no cancellation and stays in
/// plain double.
void certificate_batch(Backend b, const double* d0, const double* d1,
                       const double* d2, std::size_t n, double* lhs,
                       double* rhs, double* rad);

/// Class-space Napoleonization for n realizable classes with a common
/// epsilon: e{0,1,2}[i] from the closed form. Caller guarantees
/// realizability; the chi radicand is clamped at zero.
void e_class_batch(Backend b, int epsilon, const double* d0, const double* d1,
                   const double* d2, std::size_t n, double* e0, double* e1,
                   double* e2);

}  // namespace hypnap::kernels

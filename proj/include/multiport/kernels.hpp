// Copyright 2026 The multiport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Inner-loop numeric kernels. Every kernel has a portable scalar reference
// implementation; wider variants are compiled separately and picked at
// runtime from CPUID. Variants agree with the reference to rounding (FMA
// contraction changes the last bits), which the kernel tests pin down.

#include <cstddef>
#include <span>
#include <string_view>

#include "multiport/types.hpp"

namespace multiport::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

/// y = M x for a dense row-major rows x cols matrix.
using MatVecFn = void (*)(std::span<const Complex> matrix, std::size_t rows, std::size_t cols,
                          std::span<const Complex> x, std::span<Complex> y);
/// out[i] = |in[i]|^2.
using SquaredMagnitudesFn = void (*)(std::span<const Complex> in, std::span<double> out);
/// Permanent of a dense row-major n x n matrix (Glynn formula, Gray-code order).
using PermanentFn = Complex (*)(std::span<const Complex> matrix, std::size_t n);

struct KernelTable {
  Isa isa;
  MatVecFn matvec;
  SquaredMagnitudesFn squared_magnitudes;
  PermanentFn permanent;
};

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Best available variant, unless overridden by MULTIPORT_ISA=scalar|avx2
/// in the environment or by force_isa().
Isa active_isa();

/// Pins the variant used by kernels(). Throws if `isa` is unavailable.
void force_isa(Isa isa);
/// Drops a force_isa() pin and returns to automatic selection.
void reset_isa();

const KernelTable& kernels();
/// Table for a specific variant; throws if unavailable.
const KernelTable& kernels_for(Isa isa);

namespace scalar {
void matvec(std::span<const Complex> matrix, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y);
void squared_magnitudes(std::span<const Complex> in, std::span<double> out);
Complex permanent(std::span<const Complex> matrix, std::size_t n);
}  // namespace scalar

#if defined(MULTIPORT_HAVE_AVX2)
namespace avx2 {
void matvec(std::span<const Complex> matrix, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y);
void squared_magnitudes(std::span<const Complex> in, std::span<double> out);
Complex permanent(std::span<const Complex> matrix, std::size_t n);
}  // namespace avx2
#endif

}  // namespace multiport::kernels

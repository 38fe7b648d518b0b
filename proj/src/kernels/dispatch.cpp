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

#include <atomic>
#include <cstdlib>
#include <string>

#include "multiport/kernels.hpp"

namespace multiport::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::matvec, &scalar::squared_magnitudes,
                                   &scalar::permanent};
#if defined(MULTIPORT_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::matvec, &avx2::squared_magnitudes,
                                 &avx2::permanent};
#endif

bool cpu_has_avx2() {
#if defined(MULTIPORT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  const bool avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("MULTIPORT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && avx2) return Isa::kAvx2;
  }
  return avx2 ? Isa::kAvx2 : Isa::kScalar;
}

// -1: automatic; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: {
      static const bool ok = cpu_has_avx2();
      return ok;
    }
  }
  return false;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorKind::kInvalidConfig,
                "kernel variant " + std::string(to_string(isa)) + " is not available");
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorKind::kInvalidConfig,
                "kernel variant " + std::string(to_string(isa)) + " is not available");
  }
#if defined(MULTIPORT_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& kernels() { return kernels_for(active_isa()); }

}  // namespace multiport::kernels

// Copyright 2026 The q7 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string>

#include "q7/kernels.hpp"

namespace q7::kernels {
namespace {

using AxpyFn = void (*)(std::span<std::int64_t>, std::span<const std::int32_t>, std::int32_t);
using MaxAbsFn = std::int64_t (*)(std::span<const std::int32_t>);

struct Table {
  Isa isa;
  AxpyFn axpy;
  MaxAbsFn max_abs;
};

Table table_for(Isa isa) {
  switch (isa) {
#if defined(Q7_HAVE_AVX2)
    case Isa::avx2:
      return {Isa::avx2, &avx2::axpy, &avx2::max_abs};
#endif
#if defined(Q7_HAVE_NEON)
    case Isa::neon:
      return {Isa::neon, &neon::axpy, &neon::max_abs};
#endif
    default:
      return {Isa::scalar, &scalar::axpy, &scalar::max_abs};
  }
}

Table select() {
  if (const char* forced = std::getenv("Q7_FORCE_ISA")) {
    const std::string name(forced);
    for (const Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(isa) && isa_available(isa)) return table_for(isa);
    }
  }
  if (isa_available(Isa::avx2)) return table_for(Isa::avx2);
  if (isa_available(Isa::neon)) return table_for(Isa::neon);
  return table_for(Isa::scalar);
}

const Table& active() {
  static const Table t = select();
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(Q7_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(Q7_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active().isa; }

void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s) {
  active().axpy(acc, x, s);
}

std::int64_t max_abs(std::span<const std::int32_t> x) { return active().max_abs(x); }

}  // namespace q7::kernels

// Copyright 2026 The vcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcx/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace vcx::kernels {

// Defined in kernels_avx2.cpp; null when the TU was built without AVX2.
const KernelTable* avx2_table_or_null();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* find_table(std::string_view name) {
    for (const KernelTable* t : available_tables())
        if (name == t->name) return t;
    return nullptr;
}

const KernelTable* default_table() {
    if (const char* env = std::getenv("VCX_KERNELS")) {
        if (const KernelTable* t = find_table(env)) return t;
    }
    const auto tables = available_tables();
    return tables.back();  // widest supported
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> tables{&scalar_table()};
    if (const KernelTable* avx2 = avx2_table_or_null(); avx2 && cpu_has_avx2())
        tables.push_back(avx2);
    return tables;
}

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = default_table();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

bool select(std::string_view name) {
    if (name == "auto") {
        g_active.store(default_table(), std::memory_order_release);
        return true;
    }
    const KernelTable* t = find_table(name);
    if (!t) return false;
    g_active.store(t, std::memory_order_release);
    return true;
}

}  // namespace vcx::kernels

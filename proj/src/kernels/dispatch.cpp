#include <cstdlib>

#include "tables.hpp"

namespace qstirling::kernels {

namespace {

bool cpu_supports(std::string_view name) {
#if defined(__x86_64__) || defined(__i386__)
    if (name == "avx2") {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }
#endif
    // NEON is part of the aarch64 baseline.
    return name == "scalar" || name == "neon";
}

const KernelTable& select() {
    const auto usable = usable_kernels();
    if (const char* env = std::getenv("QSTIRLING_KERNELS")) {
        for (const KernelTable* t : usable)
            if (t->name == env) return *t;
    }
    return *usable.back();
}

}  // namespace

std::vector<const KernelTable*> compiled_kernels() {
    std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(QSTIRLING_HAVE_AVX2)
    out.push_back(&detail::avx2_table());
#endif
#if defined(QSTIRLING_HAVE_NEON)
    out.push_back(&detail::neon_table());
#endif
    return out;
}

std::vector<const KernelTable*> usable_kernels() {
    std::vector<const KernelTable*> out;
    for (const KernelTable* t : compiled_kernels())
        if (cpu_supports(t->name)) out.push_back(t);
    return out;
}

const KernelTable& active_kernels() {
    static const KernelTable& table = select();
    return table;
}

const KernelTable* find_kernels(std::string_view name) {
    for (const KernelTable* t : usable_kernels())
        if (t->name == name) return t;
    return nullptr;
}

}  // namespace qstirling::kernels

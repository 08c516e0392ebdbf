#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fstirling {

/// Selects the reference loop or the OpenMP kernel. Both must produce
/// identical results; tests compare them.
enum class Exec { serial, parallel };

inline const char* to_string(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

inline int available_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// out[i] = fn(i) for i in [0, count). Results land in index order whatever
/// the schedule. The first exception (lowest index) is rethrown after the
/// loop finishes.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, Exec exec)
{
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const auto body = [&](std::size_t i) {
        try {
            slots[i].emplace(fn(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Exec::parallel) {
        const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < n; ++i) {
            body(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace fstirling

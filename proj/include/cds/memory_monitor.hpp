#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace cds {

/// One change of the tracked heap total.
struct mem_event {
    uint64_t usec = 0;   // since monitor start
    int64_t delta = 0;   // bytes
    uint64_t total = 0;  // running total after the change
};

/// A labeled construction phase. Phases nest or abut; they never overlap partially.
struct mem_phase {
    std::string label;
    unsigned depth = 0;
    uint64_t begin_usec = 0;
    uint64_t end_usec = 0;
    uint64_t start_bytes = 0;  // tracked total when the phase began
    uint64_t peak_bytes = 0;   // largest tracked total while the phase was open
    uint64_t end_bytes = 0;

    uint64_t peak_above_start() const { return peak_bytes - start_bytes; }
};

struct mem_log {
    std::vector<mem_event> events;
    std::vector<mem_phase> phases;  // in begin order
    uint64_t peak_bytes = 0;
    uint64_t largest_allocation = 0;

    std::string to_json() const;
    const mem_phase* find(const std::string& label) const;
};

/// Process-global tracker for allocations made through tracked_allocator.
///
/// The running total is maintained at all times; events and phases are only
/// recorded between start() and stop(). All mutation happens under one mutex,
/// so concurrent builders produce a single totally ordered log.
class memory_monitor {
public:
    static void start();
    static mem_log stop();
    static bool active();

    static void begin_phase(const std::string& label);
    /// Throws std::logic_error if label is not the innermost open phase.
    static void end_phase(const std::string& label);

    static void record(int64_t delta);
    static uint64_t current_bytes();

    /// RAII phase marker.
    class phase {
    public:
        explicit phase(std::string label) : label_(std::move(label)) { begin_phase(label_); }
        ~phase() noexcept(false)
        {
            if (std::uncaught_exceptions() == 0) end_phase(label_);
            else discard_phases_from(label_);
        }
        phase(const phase&) = delete;
        phase& operator=(const phase&) = delete;

    private:
        std::string label_;
    };

private:
    static void discard_phases_from(const std::string& label);
};

template <class T>
struct tracked_allocator {
    using value_type = T;

    tracked_allocator() noexcept = default;
    template <class U>
    tracked_allocator(const tracked_allocator<U>&) noexcept
    {
    }

    T* allocate(std::size_t n)
    {
        T* p = std::allocator<T>{}.allocate(n);
        memory_monitor::record(static_cast<int64_t>(n * sizeof(T)));
        return p;
    }
    void deallocate(T* p, std::size_t n) noexcept
    {
        std::allocator<T>{}.deallocate(p, n);
        memory_monitor::record(-static_cast<int64_t>(n * sizeof(T)));
    }

    template <class U>
    bool operator==(const tracked_allocator<U>&) const noexcept
    {
        return true;
    }
};

template <class T>
using tracked_vector = std::vector<T, tracked_allocator<T>>;

}  // namespace cds

#include "cds/memory_monitor.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace cds {

namespace {

struct monitor_state {
    std::mutex mtx;
    bool active = false;
    uint64_t total = 0;
    std::chrono::steady_clock::time_point t0;
    mem_log log;
    std::vector<size_t> open;  // indices into log.phases
};

monitor_state& state()
{
    static monitor_state s;
    return s;
}

uint64_t now_usec(const monitor_state& s)
{
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - s.t0).count());
}

}  // namespace

void memory_monitor::start()
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    s.active = true;
    s.t0 = std::chrono::steady_clock::now();
    s.log = mem_log{};
    s.log.peak_bytes = s.total;
    s.open.clear();
}

mem_log memory_monitor::stop()
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    if (!s.open.empty()) {
        std::string label = s.log.phases[s.open.back()].label;
        s.active = false;
        s.open.clear();
        throw std::logic_error("memory_monitor: phase '" + label + "' still open at stop");
    }
    s.active = false;
    return std::move(s.log);
}

bool memory_monitor::active()
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    return s.active;
}

void memory_monitor::begin_phase(const std::string& label)
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    if (!s.active) return;
    mem_phase p;
    p.label = label;
    p.depth = static_cast<unsigned>(s.open.size());
    p.begin_usec = now_usec(s);
    p.start_bytes = p.peak_bytes = s.total;
    s.open.push_back(s.log.phases.size());
    s.log.phases.push_back(std::move(p));
}

void memory_monitor::end_phase(const std::string& label)
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    if (!s.active) return;
    if (s.open.empty()) throw std::logic_error("memory_monitor: end of phase '" + label + "' without begin");
    auto& p = s.log.phases[s.open.back()];
    if (p.label != label)
        throw std::logic_error("memory_monitor: end of phase '" + label + "' while '" + p.label + "' is innermost");
    p.end_usec = now_usec(s);
    p.end_bytes = s.total;
    s.open.pop_back();
}

void memory_monitor::discard_phases_from(const std::string& label)
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    while (!s.open.empty()) {
        auto& p = s.log.phases[s.open.back()];
        p.end_usec = now_usec(s);
        p.end_bytes = s.total;
        s.open.pop_back();
        if (p.label == label) break;
    }
}

void memory_monitor::record(int64_t delta)
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    if (delta < 0 && static_cast<uint64_t>(-delta) > s.total) s.total = 0;
    else s.total = static_cast<uint64_t>(static_cast<int64_t>(s.total) + delta);
    if (!s.active) return;
    try {
        s.log.events.push_back({now_usec(s), delta, s.total});
    } catch (...) {
        // the event is lost but the totals stay consistent
    }
    s.log.peak_bytes = std::max(s.log.peak_bytes, s.total);
    if (delta > 0) s.log.largest_allocation = std::max<uint64_t>(s.log.largest_allocation, delta);
    for (size_t idx : s.open) s.log.phases[idx].peak_bytes = std::max(s.log.phases[idx].peak_bytes, s.total);
}

uint64_t memory_monitor::current_bytes()
{
    auto& s = state();
    std::lock_guard lock(s.mtx);
    return s.total;
}

const mem_phase* mem_log::find(const std::string& label) const
{
    for (const auto& p : phases)
        if (p.label == label) return &p;
    return nullptr;
}

std::string mem_log::to_json() const
{
    nlohmann::json j;
    j["peak_bytes"] = peak_bytes;
    j["largest_allocation"] = largest_allocation;
    auto& ph = j["phases"] = nlohmann::json::array();
    for (const auto& p : phases) {
        ph.push_back({{"label", p.label},
                      {"depth", p.depth},
                      {"begin_us", p.begin_usec},
                      {"end_us", p.end_usec},
                      {"start_bytes", p.start_bytes},
                      {"peak_bytes", p.peak_bytes},
                      {"end_bytes", p.end_bytes}});
    }
    auto& ev = j["events"] = nlohmann::json::array();
    for (const auto& e : events) ev.push_back({e.usec, e.delta, e.total});
    return j.dump();
}

}  // namespace cds

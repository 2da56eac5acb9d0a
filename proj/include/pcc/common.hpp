#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcc {

// Bad caller-supplied data (files, flags, preconditions). CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budget exhausted: size caps, time budgets, iteration caps. CLI exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the algorithms rely on failed; indicates a bug or a
// certificate that does not certify what it claims.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultSizeCap = 1'000'000;
inline constexpr int kDefaultLinearVertexCap = 18;

/// Wall-clock budget. Default-constructed deadline never expires.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double seconds) {
        Deadline d;
        d.end_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const {
        return end_ && std::chrono::steady_clock::now() > *end_;
    }

    void check(const std::string& what) const {
        if (expired())
            throw resource_error("time budget exhausted: " + what);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Smallest h such that 2^h >= x, for x >= 1.
inline int ceil_log2(long long x) {
    int h = 0;
    long long v = 1;
    while (v < x) {
        v <<= 1;
        ++h;
    }
    return h;
}

}  // namespace pcc

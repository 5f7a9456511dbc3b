#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace urcdm {

/// Bad input from the user (flags, config keys, stage ids). CLI exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Missing/corrupt/inconsistent data on disk. CLI exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite values where finite ones are required. CLI exit code 4.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer rectangle, top-left origin.
struct RectI {
    int64_t x = 0;
    int64_t y = 0;
    int64_t w = 0;
    int64_t h = 0;

    bool operator==(const RectI&) const = default;
};

/// Real-valued rectangle (conditioning crops land between pixels).
struct RectD {
    double x = 0;
    double y = 0;
    double w = 0;
    double h = 0;
};

inline int64_t ceil_div(int64_t a, int64_t b) {
    return (a + b - 1) / b;
}

}  // namespace urcdm

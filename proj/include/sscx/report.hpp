#ifndef SSCX_REPORT_HPP
#define SSCX_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sscx/exactlinalg.hpp"

namespace sscx {

/// Ordered integer fields; insertion order is the emission order.
using IntFields = std::vector<std::pair<std::string, std::int64_t>>;

/*
 * Outcome of one verification. Every value is an integer (flags are 0/1), so
 * the status is simply field-by-field equality of expected and computed.
 */
struct Report {
    std::string suite;
    IntFields params;
    IntFields expected;
    IntFields computed;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return expected == computed; }

    void param(std::string key, std::int64_t value) { params.emplace_back(std::move(key), value); }
    void compare(const std::string& key, std::int64_t want, std::int64_t got) {
        expected.emplace_back(key, want);
        computed.emplace_back(key, got);
    }
    void compare(const std::string& key, const BigInt& want, const BigInt& got);
    /// Records a value that has no expected counterpart, which fails the report.
    void offending(std::string key, std::int64_t value) { computed.emplace_back(std::move(key), value); }
};

std::int64_t to_int64(const BigInt& v);

/// One JSON object, keys in the fixed order suite, params, expected, computed,
/// status, elapsed_ms; no trailing newline.
std::string to_json(const Report& r);

/// Total order used before emission: suite name, then params in field order.
bool report_less(const Report& a, const Report& b);

} // namespace sscx

#endif

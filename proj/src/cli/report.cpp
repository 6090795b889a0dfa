#include "sscx/report.hpp"

#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace sscx {

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

void Report::compare(const std::string& key, const BigInt& want, const BigInt& got) {
    compare(key, to_int64(want), to_int64(got));
}

std::string to_json(const Report& r) {
    auto fields = [](const IntFields& f) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (const auto& [k, v] : f) o[k] = v;
        return o;
    };
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = fields(r.params);
    j["expected"] = fields(r.expected);
    j["computed"] = fields(r.computed);
    j["status"] = r.passed() ? "pass" : "fail";
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

bool report_less(const Report& a, const Report& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.params < b.params;
}

} // namespace sscx

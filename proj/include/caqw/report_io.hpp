// report_io.hpp — JSON and CSV renderings of campaign reports and
// probability distributions.
//
// CSV: comma separated, '.' decimal point, LF line endings. Doubles are
// written with std::to_chars (shortest round-trip form), so output is
// locale-independent and identical across runs.

#pragma once

#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "caqw/digest.hpp"
#include "caqw/lattice.hpp"
#include "caqw/stats.hpp"

namespace caqw {

inline std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

inline nlohmann::ordered_json params_json(const WalkParams& params) {
    return {{"n", params.n},
            {"dim", params.d},
            {"k", params.k},
            {"theta1", params.theta1},
            {"theta2", params.theta2},
            {"alpha", {params.alpha.real(), params.alpha.imag()}},
            {"beta", {params.beta.real(), params.beta.imag()}}};
}

inline nlohmann::ordered_json to_json(const Digest& digest) {
    return {{"n", digest.n()},
            {"dim", digest.d()},
            {"k", digest.k()},
            {"bit_length", digest.bit_length()},
            {"hex", digest.to_hex()},
            {"cells", digest.cells()}};
}

namespace stats {

inline nlohmann::ordered_json to_json(const DiffusionReport& report) {
    nlohmann::ordered_json j;
    j["test"] = "avalanche";
    j["params"] = params_json(report.params);
    j["trials"] = report.trials;
    j["msg_len"] = report.msg_len;
    j["seed"] = report.seed;
    j["bit_length"] = report.bit_length;
    j["results"] = {{"B_min", report.b_min},
                    {"B_max", report.b_max},
                    {"B_mean", report.b_mean},
                    {"P_mean_percent", report.p_mean_percent},
                    {"delta_B", report.delta_b},
                    {"delta_P_percent", report.delta_p_percent}};
    j["per_trial_B"] = report.per_trial_b;
    return j;
}

inline nlohmann::ordered_json to_json(const CollisionReport& report) {
    nlohmann::ordered_json j;
    j["test"] = "collision";
    j["params"] = params_json(report.params);
    j["trials"] = report.trials;
    j["msg_len"] = report.msg_len;
    j["seed"] = report.seed;
    j["cells"] = report.cells;
    const std::size_t bits = report.cells * static_cast<std::size_t>(report.params.k);
    j["bit_length"] = bits;
    // generic birthday-search work factor for this digest length
    j["birthday_log2_trials"] = static_cast<double>(bits) / 2.0;
    j["observed"] = report.observed;
    j["theoretical"] = report.theoretical;
    return j;
}

inline nlohmann::ordered_json to_json(const UniformReport& report) {
    nlohmann::ordered_json j;
    j["test"] = "uniform";
    j["params"] = params_json(report.params);
    j["trials"] = report.trials;
    j["msg_len"] = report.msg_len;
    j["seed"] = report.seed;
    j["bit_length"] = report.bit_length;
    j["ideal_count"] = static_cast<double>(report.trials) / 2.0;
    j["mean_count"] = report.mean_count;
    j["counts"] = report.counts;
    return j;
}

// one row per trial
inline std::string to_csv(const DiffusionReport& report) {
    std::string out = "trial,B\n";
    for (std::size_t i = 0; i < report.per_trial_b.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(report.per_trial_b[i]) + "\n";
    return out;
}

// one row per omega
inline std::string to_csv(const CollisionReport& report) {
    std::string out = "omega,observed,theoretical\n";
    for (std::size_t omega = 0; omega < report.observed.size(); ++omega)
        out += std::to_string(omega) + "," + std::to_string(report.observed[omega]) + "," +
               format_double(report.theoretical[omega]) + "\n";
    return out;
}

// one row per digest bit position
inline std::string to_csv(const UniformReport& report) {
    std::string out = "bit,changed_count\n";
    for (std::size_t i = 0; i < report.counts.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(report.counts[i]) + "\n";
    return out;
}

}  // namespace stats

// Position/probability table in canonical cell order; header names the axes.
inline std::string distribution_csv(const Lattice& lattice, const std::vector<double>& probs) {
    if (probs.size() != lattice.sites())
        throw std::invalid_argument("distribution_csv: probability count must be n^d");
    static constexpr const char* axis_names[] = {"x", "y", "z"};
    std::string out;
    for (int a = 0; a < lattice.d(); ++a) {
        out += a < 3 ? axis_names[a] : ("x" + std::to_string(a));
        out += ",";
    }
    out += "probability\n";
    for (std::size_t pos = 0; pos < probs.size(); ++pos) {
        for (int c : lattice.coords(pos)) out += std::to_string(c) + ",";
        out += format_double(probs[pos]) + "\n";
    }
    return out;
}

}  // namespace caqw

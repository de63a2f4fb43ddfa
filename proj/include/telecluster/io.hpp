// Copyright 2026 The telecluster developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON file formats.
 *
 *   state:    {"num_qubits": m, "amps": [[re, im], ...]}   (2^m entries)
 *   schedule: {"n": 3, "levels": [[t], [t, t], [t, t, t, t]]}  radians;
 *             a schedule file may instead carry {"a": ..., "b": ...}
 *   resource: state fields plus {"n", "schedule_a", "schedule_b"}
 *   outcome:  {"labels": [...], "bits": "...", "probability": p}
 */

#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "telecluster/analysis.hpp"
#include "telecluster/bases.hpp"
#include "telecluster/measurement.hpp"
#include "telecluster/protocols.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/resource.hpp"

namespace telecluster {

using json = nlohmann::json;

// --- states ----------------------------------------------------------------

inline json state_to_json(const StateVector &v) {
    json amps = json::array();
    for (const cplx &a : v.amps) amps.push_back({a.real(), a.imag()});
    return json{{"num_qubits", v.num_qubits}, {"amps", std::move(amps)}};
}

inline StateVector state_from_json(const json &j) {
    const int n = j.at("num_qubits").get<int>();
    const auto &raw = j.at("amps");
    std::vector<cplx> amps;
    amps.reserve(raw.size());
    for (const auto &pair : raw) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("amplitude entries must be [re, im] pairs");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateVector(n, std::move(amps));
}

// --- schedules ---------------------------------------------------------------

inline json schedule_to_json(const AngleSchedule &s) {
    return json{{"n", s.n}, {"levels", s.levels}};
}

inline AngleSchedule schedule_from_json(const json &j) {
    return AngleSchedule(j.at("n").get<int>(),
                         j.at("levels").get<std::vector<std::vector<double>>>());
}

/// Contents of a schedule file: either one schedule for both sides or
/// explicit "a"/"b" entries.
struct ScheduleFile {
    std::optional<AngleSchedule> a;
    std::optional<AngleSchedule> b;
};

inline ScheduleFile schedule_file_from_json(const json &j) {
    ScheduleFile f;
    if (j.contains("a") || j.contains("b")) {
        if (j.contains("a")) f.a = schedule_from_json(j.at("a"));
        if (j.contains("b")) f.b = schedule_from_json(j.at("b"));
    } else {
        AngleSchedule s = schedule_from_json(j);
        f.a = s;
        f.b = std::move(s);
    }
    return f;
}

// --- resources -----------------------------------------------------------------

inline json resource_to_json(const ResourceState &r, const AngleSchedule &sched_a,
                             const AngleSchedule &sched_b) {
    json j = state_to_json(r.state);
    j["n"] = r.n;
    j["schedule_a"] = schedule_to_json(sched_a);
    j["schedule_b"] = schedule_to_json(sched_b);
    return j;
}

// --- outcomes and protocol records ------------------------------------------

inline json outcome_to_json(const PauliLabels &labels, double probability) {
    return json{{"labels", labels.labels}, {"bits", labels.bits()}, {"probability", probability}};
}

inline json teleport_record_to_json(const TeleportRecord &rec, bool include_states = true) {
    json j{{"outcome", rec.outcome.labels},
           {"outcome_bits", rec.outcome.bits()},
           {"probability", rec.probability},
           {"correction", rec.correction.labels},
           {"fidelity", rec.fidelity}};
    if (include_states) {
        j["bob_pre"] = state_to_json(rec.bob_pre);
        j["bob_post"] = state_to_json(rec.bob_post);
    }
    return j;
}

inline json dense_record_to_json(const DenseCodingRecord &rec, bool include_states = true) {
    json j{{"message", rec.message.labels}, {"message_bits", rec.message.bits()}};
    if (rec.decoded) {
        j["decoded"] = rec.decoded->labels;
        j["decoded_bits"] = rec.decoded->bits();
    } else {
        j["decoded"] = nullptr;
    }
    if (include_states) j["encoded"] = state_to_json(rec.encoded);
    return j;
}

inline json match_report_to_json(const MatchReport &m) {
    return json{{"matched", m.matched},
                {"fidelity", m.fidelity},
                {"phase", {m.phase.real(), m.phase.imag()}},
                {"permutation", m.permutation}};
}

// --- files -------------------------------------------------------------------

inline json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

inline StateVector load_state(const std::string &path) { return state_from_json(load_json(path)); }

inline void save_state(const std::string &path, const StateVector &v) {
    save_json(path, state_to_json(v));
}

inline ScheduleFile load_schedule_file(const std::string &path) {
    return schedule_file_from_json(load_json(path));
}

} // namespace telecluster

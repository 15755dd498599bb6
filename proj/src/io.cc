// Copyright 2026 The aphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aphase/io.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "aphase/errors.h"

namespace aphase {

using nlohmann::json;

namespace {

template <typename T>
T required(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("field '") + key + "' has the wrong type: " + e.what());
    }
}

std::vector<std::vector<double>> coefficient_rows(const json &j) {
    try {
        return j.get<std::vector<std::vector<double>>>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("coefficients must be a nested array of numbers: ") + e.what());
    }
}

}  // namespace

json likelihood_to_json(const HarmonicLikelihood &L) {
    return {
        {"stride", L.stride()},
        {"coeffs", L.coeff_rows()},
        {"labels", L.labels()},
        {"photon_cost", L.photon_cost()},
    };
}

HarmonicLikelihood likelihood_from_json(const json &j, double colsum_tol) {
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = required<std::vector<std::string>>(j, "labels");
    }
    return HarmonicLikelihood(
        required<int>(j, "stride"), coefficient_rows(j.at("coeffs")), std::move(labels), required<int>(j, "photon_cost"),
        colsum_tol);
}

CalibrationMatrix calibration_from_json(const json &j) {
    if (j.is_array()) {
        return CalibrationMatrix(1, coefficient_rows(j), {}, 1);
    }
    if (!j.is_object() || !j.contains("coeffs")) {
        throw ConfigError("calibration file needs a 'coeffs' field or a bare nested array");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = required<std::vector<std::string>>(j, "labels");
    }
    int stride = j.contains("stride") ? required<int>(j, "stride") : 1;
    int cost = j.contains("photon_cost") ? required<int>(j, "photon_cost") : 1;
    return CalibrationMatrix(stride, coefficient_rows(j.at("coeffs")), std::move(labels), cost);
}

json retention_to_json(const RetentionVector &r, const std::vector<std::string> &labels) {
    return {{"labels", labels}, {"retention", r.retention}, {"loss", r.loss()}};
}

json posterior_to_json(const PhasePosterior &p) {
    json moments = json::array();
    for (const auto &m : p.moments()) {
        moments.push_back({m.real(), m.imag()});
    }
    return {{"degree", p.degree()}, {"moments", moments}};
}

PhasePosterior posterior_from_json(const json &j) {
    std::vector<std::complex<double>> moments;
    for (const auto &pair : required<std::vector<std::vector<double>>>(j, "moments")) {
        if (pair.size() != 2) {
            throw ConfigError("posterior moments must be [re, im] pairs");
        }
        moments.emplace_back(pair[0], pair[1]);
    }
    return PhasePosterior::from_moments(std::move(moments), required<int>(j, "degree"));
}

json plan_to_json(const SequencePlan &plan, FixtureSet fixtures) {
    json blocks = json::array();
    for (const auto &b : plan.blocks()) {
        blocks.push_back({{"class", b.state.name()}, {"reps", b.reps}});
    }
    return {{"N", plan.total_resources()}, {"blocks", blocks}, {"fixtures", fixture_set_name(fixtures)}};
}

PlanFile plan_from_json(const json &j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
        throw ConfigError("plan file needs a 'blocks' array");
    }
    std::vector<PlanBlock> blocks;
    for (const auto &b : j.at("blocks")) {
        blocks.push_back({StateClass::parse(required<std::string>(b, "class")), required<int>(b, "reps")});
    }
    SequencePlan plan(std::move(blocks));
    if (j.contains("N") && required<int>(j, "N") != plan.total_resources()) {
        throw ConfigError(
            "plan file states N=" + std::to_string(required<int>(j, "N")) + " but its blocks use " +
            std::to_string(plan.total_resources()) + " photons");
    }
    FixtureSet fixtures = j.contains("fixtures") ? parse_fixture_set(required<std::string>(j, "fixtures"))
                                                 : FixtureSet::Experimental;
    return {std::move(plan), fixtures};
}

json statistics_to_json(const TrialStatistics &s) {
    return {
        {"N", s.total_resources},
        {"trials", s.estimates.size()},
        {"holevo_variance", s.holevo_variance},
        {"holevo_deviation", s.holevo_deviation},
        {"sqrtN_scaled_deviation", s.sqrtN_scaled_deviation},
        {"bootstrap_ci", {s.bootstrap_ci.lo, s.bootstrap_ci.hi}},
        {"undefined_estimates", s.undefined_estimates},
    };
}

std::string format_number(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    for (int precision = 6; precision <= 17; precision++) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

void write_fisher_csv(std::ostream &out, const std::vector<std::pair<double, double>> &curve) {
    out << "delta,fisher\n";
    for (const auto &[d, f] : curve) {
        out << format_number(d) << ',' << format_number(f) << '\n';
    }
}

void write_trials_csv(std::ostream &out, const std::vector<TrialOutcome> &trials) {
    out << "trial,phi_true,estimate,error\n";
    for (size_t i = 0; i < trials.size(); i++) {
        out << i << ',' << format_number(trials[i].phi_true) << ',' << format_number(trials[i].estimate) << ','
            << format_number(trials[i].error) << '\n';
    }
}

void write_curve_csv(std::ostream &out, const std::vector<CurveRow> &rows) {
    out << "N,scheme,deviation,deviation_sqrtN,ci_lo,ci_hi\n";
    for (const auto &r : rows) {
        out << r.N << ',' << r.scheme << ',' << format_number(r.deviation) << ',' << format_number(r.deviation_sqrtN)
            << ',' << format_number(r.ci_lo) << ',' << format_number(r.ci_hi) << '\n';
    }
}

}  // namespace aphase

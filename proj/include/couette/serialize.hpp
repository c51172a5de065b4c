#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "couette/criteria.hpp"
#include "couette/eigensolver.hpp"
#include "couette/sweep.hpp"

namespace couette {

/// Locale-independent rendering with 17 significant digits and a '.' decimal
/// separator, so sweep output is byte-stable across platforms and runs.
inline std::string format_double(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Parameter columns for one flow case, in canonical order.
inline std::vector<SweepParam> csv_params(FlowCase flow_case) {
    if (flow_case == FlowCase::CaseI)
        return {SweepParam::Mu, SweepParam::Alpha, SweepParam::AMinusB};
    return {SweepParam::Mu, SweepParam::Alpha0, SweepParam::Alpha1, SweepParam::AMinusB};
}

inline double param_value(const FlowConfig& cfg, SweepParam p) {
    switch (p) {
    case SweepParam::Mu: return cfg.mu;
    case SweepParam::Alpha: return cfg.alpha;
    case SweepParam::Alpha0: return cfg.alpha0;
    case SweepParam::Alpha1: return cfg.alpha1;
    case SweepParam::AMinusB: return cfg.a - cfg.b;
    }
    return 0.0;
}

/// CSV table of sweep records: realized parameters, classification, abscissa,
/// criterion margin and id. LF line endings.
inline std::string sweep_csv(const SweepGrid& grid, const std::vector<SweepRecord>& records) {
    std::string out;
    const std::vector<SweepParam> params = csv_params(grid.flow_case);
    for (SweepParam p : params) {
        out += to_string(p);
        out += ',';
    }
    out += "classification,abscissa,margin,criterion\n";
    for (const SweepRecord& rec : records) {
        for (SweepParam p : params) {
            out += format_double(param_value(rec.config, p));
            out += ',';
        }
        if (!rec.error.empty())
            out += "Error";
        else if (rec.classification)
            out += to_string(*rec.classification);
        else
            out += "Unknown";
        out += ',';
        if (rec.abscissa)
            out += format_double(rec.abscissa->m);
        out += ',';
        if (rec.criterion)
            out += format_double(rec.criterion->margin);
        out += ',';
        if (rec.criterion && rec.criterion->criterion)
            out += to_string(*rec.criterion->criterion);
        out += '\n';
    }
    return out;
}

inline nlohmann::json criterion_json(const CriterionResult& res) {
    nlohmann::json j;
    j["verdict"] = res.proven() ? "ProvenStable" : "Unknown";
    if (res.criterion)
        j["criterion"] = to_string(*res.criterion);
    j["margin"] = res.margin;
    nlohmann::json d;
    for (const auto& [name, value] : res.details)
        d[name] = value;
    j["details"] = d;
    return j;
}

inline nlohmann::json spectrum_json(const ModeSpectrum& spec) {
    nlohmann::json j;
    j["k"] = spec.k;
    j["resolution"] = spec.resolution;
    nlohmann::json evs = nlohmann::json::array();
    for (const auto& ev : spec.eigenvalues)
        evs.push_back({ev.real(), ev.imag()});
    j["eigenvalues"] = evs;
    return j;
}

inline nlohmann::json abscissa_json(const AbscissaReport& rep) {
    nlohmann::json j;
    j["m"] = rep.m;
    j["argmax_k"] = rep.argmax_k;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [k, mk] : rep.per_k)
        per.push_back({{"k", k}, {"max_re_lambda", mk}});
    j["per_k"] = per;
    return j;
}

inline nlohmann::json sweep_record_json(const SweepGrid& grid, const SweepRecord& rec) {
    nlohmann::json j;
    nlohmann::json pt;
    for (SweepParam p : csv_params(grid.flow_case))
        pt[to_string(p)] = param_value(rec.config, p);
    j["point"] = pt;
    if (!rec.error.empty()) {
        j["error"] = rec.error;
        return j;
    }
    if (rec.criterion)
        j["criterion"] = criterion_json(*rec.criterion);
    if (rec.abscissa)
        j["abscissa"] = abscissa_json(*rec.abscissa);
    j["classification"] =
        rec.classification ? to_string(*rec.classification) : "Unknown";
    j["soundness_violation"] = rec.soundness_violation;
    return j;
}

inline nlohmann::json sweep_json(const SweepGrid& grid, const std::vector<SweepRecord>& records) {
    nlohmann::json j;
    j["schema"] = 1;
    j["case"] = grid.flow_case == FlowCase::CaseI ? "I" : "II";
    nlohmann::json recs = nlohmann::json::array();
    for (const SweepRecord& rec : records)
        recs.push_back(sweep_record_json(grid, rec));
    j["records"] = recs;
    return j;
}

} // namespace couette

#include "sheetcurrent/serialize.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace sheetcurrent {

std::string format_sig17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

nlohmann::json number_or_tag(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

std::string to_json(const SeriesResult& r) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["weight_convention"] = to_string(r.convention);
    j["m_max"] = r.m_max;
    j["partial_sum"] = r.partial_sum;
    j["tail_bound"] = number_or_tag(r.tail_bound);
    auto terms = nlohmann::json::array();
    for (const auto& [m, v] : r.terms) terms.push_back({m, v});
    j["terms"] = std::move(terms);
    j["converged"] = r.converged;
    return j.dump();
}

std::string to_json(const EstimatorResult& r) {
    nlohmann::json j;
    j["mean_re"] = r.mean.real();
    j["mean_im"] = r.mean.imag();
    j["std_error"] = r.std_error;
    j["replicas"] = r.replicas;
    j["seed"] = r.seed;
    j["exact_reference"] = r.exact_reference ? nlohmann::json(*r.exact_reference) : nlohmann::json();
    return j.dump();
}

std::string to_json(const SobolevScan& s) {
    nlohmann::json j;
    j["r"] = s.r;
    j["d"] = s.d;
    j["values"] = s.values;
    j["integral_value"] = s.integral_value;
    j["cutoff"] = s.cutoff;
    j["verdict"] = to_string(s.verdict);
    return j.dump();
}

}  // namespace sheetcurrent

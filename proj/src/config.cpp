#include "colearn/config.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

namespace colearn {

namespace {

constexpr std::array<std::string_view, 13> kKeys = {
    "agents", "hex_disc_radius", "circumradius", "C_r",          "C_f",     "epsilon",   "topology",
    "max_ticks", "speed",        "seed",         "sample_every", "repeats", "base_seed",
};

constexpr std::array<std::string_view, 4> kSweepKeys = {"topology", "C_r", "C_f", "epsilon"};

bool is_sweep_key(std::string_view key) {
    return std::find(kSweepKeys.begin(), kSweepKeys.end(), key) != kSweepKeys.end();
}

double as_real(const nlohmann::json& value, const std::string& key) {
    if (!value.is_number()) throw ConfigError(key, "expected a number, got " + value.dump());
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
    return x;
}

std::int64_t as_integer(const nlohmann::json& value, const std::string& key) {
    if (value.is_number_integer()) return value.get<std::int64_t>();
    if (value.is_number_float()) {
        const double x = value.get<double>();
        if (std::isfinite(x) && std::floor(x) == x && std::abs(x) < 9.0e15) return static_cast<std::int64_t>(x);
    }
    throw ConfigError(key, "expected an integer, got " + value.dump());
}

std::uint64_t as_seed(const nlohmann::json& value, const std::string& key) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    const std::int64_t x = as_integer(value, key);
    if (x < 0) throw ConfigError(key, "must be non-negative");
    return static_cast<std::uint64_t>(x);
}

Topology as_topology(const nlohmann::json& value, const std::string& key) {
    if (!value.is_string()) throw ConfigError(key, "expected \"complete\" or \"lattice:K\", got " + value.dump());
    return Topology::parse(value.get<std::string>());
}

/// Scalar fields shared by single runs and sweeps.
void read_common(const nlohmann::json& doc, SimConfig& config) {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array() && !is_sweep_key(key)) throw ConfigError(key, "lists are only allowed for sweep keys");
        if (key == "agents") {
            const std::int64_t m = as_integer(value, key);
            if (m < 2) throw ConfigError(key, "need at least 2 agents");
            config.agents = static_cast<std::size_t>(m);
        } else if (key == "hex_disc_radius") {
            const std::int64_t r = as_integer(value, key);
            if (r < 1 || r > 1000) throw ConfigError(key, "must lie in [1, 1000]");
            config.hex_disc_radius = static_cast<int>(r);
        } else if (key == "circumradius") {
            config.circumradius = as_real(value, key);
        } else if (key == "max_ticks") {
            config.max_ticks = as_integer(value, key);
        } else if (key == "speed") {
            config.speed = as_real(value, key);
        } else if (key == "seed") {
            config.seed = as_seed(value, key);
        } else if (key == "sample_every") {
            config.sample_every = as_integer(value, key);
        }
    }
}

template <typename T, typename Convert>
std::vector<T> as_list(const nlohmann::json& value, const std::string& key, Convert convert) {
    std::vector<T> out;
    if (value.is_array()) {
        if (value.empty()) throw ConfigError(key, "sweep list is empty");
        for (const auto& item : value) out.push_back(convert(item, key));
    } else {
        out.push_back(convert(value, key));
    }
    return out;
}

} // namespace

std::span<const std::string_view> config_keys() noexcept { return kKeys; }

bool is_config_key(std::string_view key) noexcept {
    return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

void check_config_keys(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config", "document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!is_config_key(key)) throw ConfigError(key, "unknown config key");
    }
}

nlohmann::json load_config_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read " + path.string());
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("config", path.string() + " is not valid JSON");
    check_config_keys(doc);
    return doc;
}

void apply_override(nlohmann::json& doc, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ConfigError("--set", "expected key=value, got \"" + std::string(assignment) + "\"");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    if (!is_config_key(key)) throw ConfigError(key, "unknown config key");

    nlohmann::json value = nlohmann::json::parse(text, nullptr, false);
    if (value.is_discarded() || text.empty()) value = text;
    doc[key] = std::move(value);
}

SimConfig sim_config_from(const nlohmann::json& doc) {
    check_config_keys(doc);
    SimConfig config;
    read_common(doc, config);
    for (std::string_view sweep_key : kSweepKeys) {
        const std::string key(sweep_key);
        if (!doc.contains(key)) continue;
        const auto& value = doc.at(key);
        if (value.is_array()) throw ConfigError(key, "a single run needs one value; lists are for sweep");
        if (key == "topology") config.topology = as_topology(value, key);
        else if (key == "C_r") config.comm_radius = as_real(value, key);
        else if (key == "C_f") config.comm_frequency = as_real(value, key);
        else if (key == "epsilon") config.epsilon = as_real(value, key);
    }
    config.validate();
    return config;
}

SweepSpec sweep_spec_from(const nlohmann::json& doc) {
    check_config_keys(doc);
    SweepSpec spec;
    read_common(doc, spec.base);
    if (doc.contains("topology")) spec.topologies = as_list<Topology>(doc.at("topology"), "topology", as_topology);
    if (doc.contains("C_r")) spec.comm_radii = as_list<double>(doc.at("C_r"), "C_r", as_real);
    if (doc.contains("C_f")) spec.comm_frequencies = as_list<double>(doc.at("C_f"), "C_f", as_real);
    if (doc.contains("epsilon")) spec.epsilons = as_list<double>(doc.at("epsilon"), "epsilon", as_real);
    if (doc.contains("repeats")) {
        const std::int64_t repeats = as_integer(doc.at("repeats"), "repeats");
        if (repeats < 1) throw ConfigError("repeats", "must be >= 1");
        spec.repeats = static_cast<std::size_t>(repeats);
    }
    if (doc.contains("base_seed")) spec.base_seed = as_seed(doc.at("base_seed"), "base_seed");
    spec.validate();
    // Surface range errors (epsilon > 0.5, odd k, ...) before any run starts.
    for (const Cell& cell : cells(spec)) cell_config(spec, cell).validate();
    return spec;
}

} // namespace colearn

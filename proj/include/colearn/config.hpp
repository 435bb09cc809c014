#pragma once

#include "colearn/engine.hpp"
#include "colearn/experiment.hpp"

#include "json.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace colearn {

// A configuration document is one flat JSON object whose keys mirror
// SimConfig / SweepSpec:
//
//   agents, hex_disc_radius, circumradius, C_r, C_f, epsilon, topology,
//   max_ticks, speed, seed, sample_every, repeats, base_seed
//
// For sweeps, topology / C_r / C_f / epsilon may be lists. Topologies are
// written "complete" or "lattice:K".

std::span<const std::string_view> config_keys() noexcept;

bool is_config_key(std::string_view key) noexcept;

/// Reads and parses a document. Throws ConfigError("config", ...) when the
/// file is unreadable, malformed, or uses an unknown key.
nlohmann::json load_config_document(const std::filesystem::path& path);

/// Checks that `doc` is an object containing only known keys.
void check_config_keys(const nlohmann::json& doc);

/// Applies one "key=value" override. The value is read as JSON when it
/// parses (numbers, lists) and as a bare string otherwise.
void apply_override(nlohmann::json& doc, std::string_view assignment);

/// Single-run configuration; every swept key must hold a scalar here.
SimConfig sim_config_from(const nlohmann::json& doc);

/// Sweep specification; scalars count as one-element lists.
SweepSpec sweep_spec_from(const nlohmann::json& doc);

} // namespace colearn

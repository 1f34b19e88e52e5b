#pragma once

/** \file config.hpp
 *
 *  \brief Run configuration shared by the command-line tools, and its JSON form.
 *
 *  Precedence, lowest first: built-in defaults, preset, config file, command-line flags.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "godel/gauge.hpp"
#include "godel/geometry.hpp"
#include "godel/observables.hpp"

namespace godel {

/// One swept parameter: `count` values from `start` to `stop` (inclusive), linear or logarithmic.
struct SweepAxis
{
    std::string param;
    double start{0.0};
    double stop{0.0};
    int count{1};
    bool log{false};

    void validate() const;
    std::vector<double> values() const;

    bool operator==(SweepAxis const&) const = default;
};

/// Parameter names a sweep may refer to.
std::vector<std::string> const& sweep_parameters();

/// "param:start:stop:count[:log]".
SweepAxis parse_sweep(std::string const& text);
std::string format_sweep(SweepAxis const& axis);

enum class OutputFormat
{
    csv,
    structured,
};

struct RunConfig
{
    GeometryParams geometry;
    MonopoleConfig monopole;
    FluxConfig flux;
    /// l^2 of the Goedel-type family (causality only).
    double l2{0.5};
    std::vector<SweepAxis> sweep;
    LevelSet levels;
    /// Empty: standard output.
    std::string out;
    OutputFormat format{OutputFormat::csv};
    std::uint64_t seed{20240607};
    /// Worker threads; 0 means "unset" (environment, then hardware concurrency).
    int jobs{0};

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// The only preset: twelve defects (g = 3/2), alpha = 1, R = 1.
void apply_preset(RunConfig& cfg, std::string const& name);

nlohmann::json to_json(RunConfig const& cfg);

/// Overlays the keys present in `j` onto `cfg`. Unknown keys and type mismatches raise ConfigError
/// naming the offending field.
void merge_json(RunConfig& cfg, nlohmann::json const& j);

RunConfig from_json(nlohmann::json const& j);

/// Reads a JSON config file and overlays it on `cfg`; parse errors report line and column.
void merge_config_file(RunConfig& cfg, std::string const& path);

/// Sets a single named model parameter (the sweep parameter names).
void set_parameter(RunConfig& cfg, std::string const& name, double value);

std::string to_string(OutputFormat f);
OutputFormat parse_format(std::string const& s);

} // namespace godel

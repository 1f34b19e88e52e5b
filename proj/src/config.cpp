#include "godel/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "godel/errors.hpp"

namespace godel {

using nlohmann::json;

namespace {

std::vector<std::string>
split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double
parse_double(std::string const& s, std::string const& what)
{
    std::size_t used = 0;
    double v         = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw ConfigError(what + ": '" + s + "' is not a number");
    }
    return v;
}

void
check_keys(json const& j, std::string const& where, std::set<std::string> const& allowed)
{
    if (!j.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (auto const& [k, v] : j.items()) {
        if (!allowed.contains(k)) {
            throw ConfigError(where + "." + k + ": unknown key");
        }
    }
}

template <class T>
T
get_as(json const& j, std::string const& where)
{
    try {
        return j.get<T>();
    } catch (json::exception const& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

double
get_number(json const& j, std::string const& where)
{
    if (!j.is_number()) {
        throw ConfigError(where + ": expected a number");
    }
    return j.get<double>();
}

Branch
parse_branch(std::string const& s, std::string const& where)
{
    if (s == "plus") {
        return Branch::plus;
    }
    if (s == "minus") {
        return Branch::minus;
    }
    throw ConfigError(where + ": expected 'plus' or 'minus', got '" + s + "'");
}

MLattice
parse_lattice(std::string const& s, std::string const& where)
{
    if (s == "half_integer") {
        return MLattice::half_integer;
    }
    if (s == "integer") {
        return MLattice::integer;
    }
    throw ConfigError(where + ": expected 'half_integer' or 'integer', got '" + s + "'");
}

} // namespace

void
SweepAxis::validate() const
{
    auto const& names = sweep_parameters();
    if (std::find(names.begin(), names.end(), param) == names.end()) {
        throw ConfigError("sweep: unknown parameter '" + param + "'");
    }
    if (count < 1) {
        throw ConfigError("sweep " + param + ": count must be >= 1");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw ConfigError("sweep " + param + ": bounds must be finite");
    }
    if (log && !(start > 0.0 && stop > 0.0)) {
        throw ConfigError("sweep " + param + ": logarithmic axis needs positive bounds");
    }
}

std::vector<double>
SweepAxis::values() const
{
    validate();
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        double const t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        out[i]         = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                             : start + t * (stop - start);
    }
    if (count > 1) {
        out.back() = stop;
    }
    return out;
}

std::vector<std::string> const&
sweep_parameters()
{
    static std::vector<std::string> const names{"alpha", "omega", "radius", "flux", "defects", "l2", "hbar", "vf"};
    return names;
}

SweepAxis
parse_sweep(std::string const& text)
{
    auto const parts = split(text, ':');
    if (parts.size() != 4 && parts.size() != 5) {
        throw ConfigError("sweep '" + text + "': expected param:start:stop:count[:log]");
    }
    SweepAxis a;
    a.param = parts[0];
    a.start = parse_double(parts[1], "sweep start");
    a.stop  = parse_double(parts[2], "sweep stop");

    double const count = parse_double(parts[3], "sweep count");
    if (count != std::floor(count) || count < 1 || count > 1e7) {
        throw ConfigError("sweep '" + text + "': count must be a positive integer");
    }
    a.count = static_cast<int>(count);
    if (parts.size() == 5) {
        if (parts[4] != "log" && parts[4] != "lin") {
            throw ConfigError("sweep '" + text + "': fifth field must be 'log' or 'lin'");
        }
        a.log = parts[4] == "log";
    }
    a.validate();
    return a;
}

std::string
format_sweep(SweepAxis const& axis)
{
    json const s = axis.start;
    json const e = axis.stop;
    return axis.param + ":" + s.dump() + ":" + e.dump() + ":" + std::to_string(axis.count) + (axis.log ? ":log" : "");
}

void
RunConfig::validate() const
{
    try {
        geometry.validate();
        levels.validate();
    } catch (DomainError const& e) {
        throw ConfigError(e.what());
    }
    if (monopole.defects < 0) {
        throw ConfigError("model.defects must be non-negative");
    }
    if (!std::isfinite(flux.flux) || !std::isfinite(l2) || !std::isfinite(geometry.omega)) {
        throw ConfigError("model: flux, omega and l2 must be finite");
    }
    if (jobs < 0) {
        throw ConfigError("jobs must be non-negative");
    }
    std::set<std::string> seen;
    for (auto const& a : sweep) {
        a.validate();
        if (!seen.insert(a.param).second) {
            throw ConfigError("sweep: parameter '" + a.param + "' appears twice");
        }
    }
}

void
apply_preset(RunConfig& cfg, std::string const& name)
{
    if (name != "c60") {
        throw ConfigError("unknown preset '" + name + "' (available: c60)");
    }
    cfg.monopole.defects = c60_defects;
    cfg.geometry.alpha   = 1.0;
    cfg.geometry.radius  = 1.0;
}

void
set_parameter(RunConfig& cfg, std::string const& name, double value)
{
    if (name == "alpha") {
        cfg.geometry.alpha = value;
    } else if (name == "omega") {
        cfg.geometry.omega = value;
    } else if (name == "radius") {
        cfg.geometry.radius = value;
    } else if (name == "flux") {
        cfg.flux.flux = value;
    } else if (name == "defects") {
        if (value != std::nearbyint(value)) {
            throw ConfigError("defects must be an integer");
        }
        cfg.monopole.defects = static_cast<std::int64_t>(value);
    } else if (name == "l2") {
        cfg.l2 = value;
    } else if (name == "hbar") {
        cfg.geometry.hbar = value;
    } else if (name == "vf") {
        cfg.geometry.vf = value;
    } else {
        throw ConfigError("unknown parameter '" + name + "'");
    }
}

json
to_json(RunConfig const& cfg)
{
    json states = json::array();
    for (auto const& [n, m] : cfg.levels.explicit_states) {
        states.push_back({n, m});
    }
    json sweep = json::array();
    for (auto const& a : cfg.sweep) {
        sweep.push_back(format_sweep(a));
    }
    return json{
        {"model",
         {
             {"alpha", cfg.geometry.alpha},
             {"omega", cfg.geometry.omega},
             {"radius", cfg.geometry.radius},
             {"hbar", cfg.geometry.hbar},
             {"vf", cfg.geometry.vf},
             {"defects", cfg.monopole.defects},
             {"flux", cfg.flux.flux},
             {"l2", cfg.l2},
         }},
        {"sweep", sweep},
        {"levels",
         {
             {"n_max", cfg.levels.n_max},
             {"m_max", cfg.levels.m_max},
             {"branch", to_string(cfg.levels.branch)},
             {"skip_invalid", cfg.levels.skip_invalid},
             {"lattice", to_string(cfg.levels.lattice)},
             {"states", states},
         }},
        {"output", {{"path", cfg.out}, {"format", to_string(cfg.format)}}},
        {"seed", cfg.seed},
        {"jobs", cfg.jobs},
    };
}

void
merge_json(RunConfig& cfg, json const& j)
{
    check_keys(j, "config", {"model", "sweep", "levels", "output", "seed", "jobs"});

    if (j.contains("model")) {
        json const& m = j.at("model");
        check_keys(m, "model", {"alpha", "omega", "radius", "hbar", "vf", "defects", "flux", "l2"});
        for (auto const& [k, v] : m.items()) {
            if (k == "defects") {
                cfg.monopole.defects = get_as<std::int64_t>(v, "model.defects");
                if (!v.is_number_integer()) {
                    throw ConfigError("model.defects: expected an integer");
                }
            } else {
                set_parameter(cfg, k, get_number(v, "model." + k));
            }
        }
    }
    if (j.contains("sweep")) {
        json const& s = j.at("sweep");
        if (!s.is_array()) {
            throw ConfigError("sweep: expected an array of 'param:start:stop:count[:log]' strings");
        }
        cfg.sweep.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            cfg.sweep.push_back(parse_sweep(get_as<std::string>(s[i], "sweep[" + std::to_string(i) + "]")));
        }
    }
    if (j.contains("levels")) {
        json const& l = j.at("levels");
        check_keys(l, "levels", {"n_max", "m_max", "branch", "skip_invalid", "lattice", "states"});
        if (l.contains("n_max")) {
            cfg.levels.n_max = get_as<int>(l.at("n_max"), "levels.n_max");
        }
        if (l.contains("m_max")) {
            cfg.levels.m_max = get_number(l.at("m_max"), "levels.m_max");
        }
        if (l.contains("branch")) {
            cfg.levels.branch = parse_branch(get_as<std::string>(l.at("branch"), "levels.branch"), "levels.branch");
        }
        if (l.contains("skip_invalid")) {
            cfg.levels.skip_invalid = get_as<bool>(l.at("skip_invalid"), "levels.skip_invalid");
        }
        if (l.contains("lattice")) {
            cfg.levels.lattice =
                parse_lattice(get_as<std::string>(l.at("lattice"), "levels.lattice"), "levels.lattice");
        }
        if (l.contains("states")) {
            json const& st = l.at("states");
            if (!st.is_array()) {
                throw ConfigError("levels.states: expected an array of [n, m] pairs");
            }
            cfg.levels.explicit_states.clear();
            for (std::size_t i = 0; i < st.size(); ++i) {
                std::string const where = "levels.states[" + std::to_string(i) + "]";
                if (!st[i].is_array() || st[i].size() != 2) {
                    throw ConfigError(where + ": expected [n, m]");
                }
                cfg.levels.explicit_states.emplace_back(get_as<int>(st[i][0], where + "[0]"),
                                                        get_number(st[i][1], where + "[1]"));
            }
        }
    }
    if (j.contains("output")) {
        json const& o = j.at("output");
        check_keys(o, "output", {"path", "format"});
        if (o.contains("path")) {
            cfg.out = get_as<std::string>(o.at("path"), "output.path");
        }
        if (o.contains("format")) {
            try {
                cfg.format = parse_format(get_as<std::string>(o.at("format"), "output.format"));
            } catch (ConfigError const& e) {
                throw ConfigError(std::string("output.format: ") + e.what());
            }
        }
    }
    if (j.contains("seed")) {
        cfg.seed = get_as<std::uint64_t>(j.at("seed"), "seed");
    }
    if (j.contains("jobs")) {
        cfg.jobs = get_as<int>(j.at("jobs"), "jobs");
    }
    cfg.validate();
}

RunConfig
from_json(json const& j)
{
    RunConfig cfg;
    merge_json(cfg, j);
    return cfg;
}

void
merge_config_file(RunConfig& cfg, std::string const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string const text = buf.str();

    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const& e) {
        // byte offset -> line:column
        std::size_t const at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line     = 1;
        std::size_t col      = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream s;
        s << path << ":" << line << ":" << col << ": " << e.what();
        throw ConfigError(s.str());
    }
    try {
        merge_json(cfg, j);
    } catch (ConfigError const& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string
to_string(OutputFormat f)
{
    return f == OutputFormat::csv ? "csv" : "structured";
}

OutputFormat
parse_format(std::string const& s)
{
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "structured") {
        return OutputFormat::structured;
    }
    throw ConfigError("format must be 'csv' or 'structured', got '" + s + "'");
}

} // namespace godel

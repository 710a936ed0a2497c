#include "config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace affine2d::tools {

namespace {

double parse_double(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw domain_error("config: key '" + key + "' expects a number, got '" + v + "'");
    }
    if (pos != v.size())
        throw domain_error("config: trailing characters in value of '" + key + "'");
    return out;
}

long parse_long(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    long out;
    try {
        out = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw domain_error("config: key '" + key + "' expects an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw domain_error("config: trailing characters in value of '" + key + "'");
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& key_table()
{
    static const std::map<std::string, Setter> table = {
        {"model.kind", [](RunConfig& c, const std::string&, const std::string& v) { c.model_kind = v; }},
        {"model.mu", [](RunConfig& c, const std::string& k, const std::string& v) { c.mu = parse_double(k, v); }},
        {"model.stiffness", [](RunConfig& c, const std::string& k, const std::string& v) { c.stiffness = parse_double(k, v); }},
        {"model.hbar", [](RunConfig& c, const std::string& k, const std::string& v) { c.hbar = parse_double(k, v); }},
        {"chart", [](RunConfig& c, const std::string&, const std::string& v) { c.chart = v; }},
        {"state.q1", [](RunConfig& c, const std::string& k, const std::string& v) { c.q[0] = parse_double(k, v); }},
        {"state.q2", [](RunConfig& c, const std::string& k, const std::string& v) { c.q[1] = parse_double(k, v); }},
        {"state.q3", [](RunConfig& c, const std::string& k, const std::string& v) { c.q[2] = parse_double(k, v); }},
        {"state.q4", [](RunConfig& c, const std::string& k, const std::string& v) { c.q[3] = parse_double(k, v); }},
        {"state.p1", [](RunConfig& c, const std::string& k, const std::string& v) { c.p[0] = parse_double(k, v); }},
        {"state.p2", [](RunConfig& c, const std::string& k, const std::string& v) { c.p[1] = parse_double(k, v); }},
        {"state.p3", [](RunConfig& c, const std::string& k, const std::string& v) { c.p[2] = parse_double(k, v); }},
        {"state.p4", [](RunConfig& c, const std::string& k, const std::string& v) { c.p[3] = parse_double(k, v); }},
        {"integrator.scheme", [](RunConfig& c, const std::string&, const std::string& v) { c.scheme = v; }},
        {"integrator.dt", [](RunConfig& c, const std::string& k, const std::string& v) { c.dt = parse_double(k, v); }},
        {"integrator.steps", [](RunConfig& c, const std::string& k, const std::string& v) { c.steps = parse_long(k, v); }},
        {"grid.n", [](RunConfig& c, const std::string& k, const std::string& v) { c.grid_n = static_cast<int>(parse_long(k, v)); }},
        {"quantum.n_max", [](RunConfig& c, const std::string& k, const std::string& v) { c.n_max = static_cast<int>(parse_long(k, v)); }},
        {"quantum.m_max", [](RunConfig& c, const std::string& k, const std::string& v) { c.m_max = static_cast<int>(parse_long(k, v)); }},
        {"quantum.l_max", [](RunConfig& c, const std::string& k, const std::string& v) { c.l_max = static_cast<int>(parse_long(k, v)); }},
        {"convention", [](RunConfig& c, const std::string&, const std::string& v) { c.convention = v; }},
        {"output.path", [](RunConfig& c, const std::string&, const std::string& v) { c.output_path = v; }},
        {"output.format", [](RunConfig& c, const std::string&, const std::string& v) { c.output_format = v; }},
        {"seed", [](RunConfig& c, const std::string& k, const std::string& v) { c.seed = static_cast<std::uint64_t>(parse_long(k, v)); }},
        {"samples", [](RunConfig& c, const std::string& k, const std::string& v) { c.samples = parse_long(k, v); }},
    };
    return table;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value)
{
    auto it = key_table().find(key);
    if (it == key_table().end())
        throw domain_error("config: unknown key '" + key + "'");
    it->second(cfg, key, value);
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw domain_error("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config: line " + std::to_string(lineno)
                               + " is not key = value");
        apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

PotentialModel RunConfig::model() const
{
    PotentialModel m;
    m.kind = potential_kind_from_name(model_kind);
    m.params = {mu, stiffness, hbar};
    return m;
}

PhaseState RunConfig::initial_state() const
{
    PhaseState s;
    s.point.chart = chart_from_name(chart);
    s.point.q = q;
    s.p = Eigen::Vector4d(p[0], p[1], p[2], p[3]);
    return s;
}

Integrator RunConfig::integrator() const { return integrator_from_name(scheme); }

double RunConfig::time_step() const
{
    return dt > 0 ? dt : default_time_step({mu, stiffness, hbar});
}

void RunConfig::validate() const
{
    PhysicalParams params{mu, stiffness, hbar};
    params.validate();
    (void)potential_kind_from_name(model_kind);
    (void)chart_from_name(chart);
    (void)integrator_from_name(scheme);
    if (dt < 0)
        throw domain_error("config: integrator.dt must be nonnegative");
    if (steps < 1)
        throw domain_error("config: integrator.steps must be positive");
    if (grid_n < 200)
        throw domain_error("config: grid.n must be at least 200");
    if (n_max < 0 || m_max < 0 || l_max < 0)
        throw domain_error("config: quantum ranges must be nonnegative");
    if (convention != "integer" && convention != "halfInteger")
        throw domain_error("config: convention must be integer or halfInteger");
    if (output_format != "csv" && output_format != "json")
        throw domain_error("config: output.format must be csv or json");
    if (samples < 1)
        throw domain_error("config: samples must be positive");
}

} // namespace affine2d::tools

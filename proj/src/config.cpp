#include "phdg/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "phdg/scenario.hpp"

namespace phdg {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::string& where,
                         std::initializer_list<const char*> known) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        bool found = false;
        for (const char* key : known)
            if (it.key() == key)
                found = true;
        if (!found)
            throw ConfigError("config: unknown key '" + where + it.key() + "'");
    }
}

double require_number(const json& object, const std::string& where, const char* key) {
    if (!object.contains(key))
        throw ConfigError("config: missing field '" + where + key + "'");
    if (!object[key].is_number())
        throw ConfigError("config: field '" + where + key + "' must be a number");
    return object[key].get<double>();
}

int require_int(const json& object, const std::string& where, const char* key) {
    if (!object.contains(key))
        throw ConfigError("config: missing field '" + where + key + "'");
    if (!object[key].is_number_integer())
        throw ConfigError("config: field '" + where + key + "' must be an integer");
    return object[key].get<int>();
}

BoundaryKind parse_kind(const json& object, const std::string& where, const char* key) {
    if (!object.contains(key) || !object[key].is_string())
        throw ConfigError("config: field '" + where + key +
                          "' must be \"dirichlet\" or \"neumann\"");
    const std::string kind = object[key].get<std::string>();
    if (kind == "dirichlet")
        return BoundaryKind::Dirichlet;
    if (kind == "neumann")
        return BoundaryKind::Neumann;
    throw ConfigError("config: field '" + where + key + "' has invalid value '" + kind + "'");
}

} // namespace

std::function<double(double)> parse_signal(const std::string& spec) {
    if (spec == "paper_pulse")
        return paper_pulse;
    if (spec == "zero")
        return [](double) { return 0.0; };
    if (spec.rfind("constant:", 0) == 0) {
        const std::string arg = spec.substr(9);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw ConfigError("config: bad constant signal '" + spec + "'");
        }
        if (used != arg.size())
            throw ConfigError("config: bad constant signal '" + spec + "'");
        return [value](double) { return value; };
    }
    if (spec.rfind("sine:", 0) == 0) {
        std::stringstream parts(spec.substr(5));
        std::string token;
        std::vector<double> args;
        while (std::getline(parts, token, ':')) {
            try {
                std::size_t used = 0;
                args.push_back(std::stod(token, &used));
                if (used != token.size())
                    throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ConfigError("config: bad sine signal '" + spec + "'");
            }
        }
        if (args.size() != 3)
            throw ConfigError("config: sine signal needs amp:freq:t_off, got '" + spec + "'");
        const double amp = args[0], freq = args[1], t_off = args[2];
        return [amp, freq, t_off](double t) {
            return (t >= 0.0 && t < t_off) ? amp * std::sin(2.0 * M_PI * freq * t) : 0.0;
        };
    }
    throw ConfigError("config: unknown signal '" + spec + "'");
}

InputSignal RunConfig::input() const {
    InputSignal signal;
    signal.u1 = parse_signal(u1_spec);
    signal.u2 = parse_signal(u2_spec);
    return signal;
}

GlobalPHModel RunConfig::build_model() const {
    const Mesh1D mesh = build_uniform_mesh(mesh_a, mesh_b, mesh_n);
    const ReferenceBasis phi(k1);
    const ReferenceBasis psi(k2);
    return assemble_global(mesh, phi, psi, flux, bc, c1, c2);
}

SimulateOptions RunConfig::simulate_options() const {
    SimulateOptions options;
    options.T = T;
    options.dt = dt;
    options.output_every = output_every;
    options.snapshot_times = snapshot_times;
    return options;
}

RunConfig parse_config_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: invalid JSON: ") + err.what());
    }
    if (!doc.is_object())
        throw ConfigError("config: top level must be a JSON object");
    reject_unknown_keys(doc, "", {"mesh", "degrees", "material", "flux", "bc", "input", "time",
                                  "snapshot_times", "output_dir"});

    RunConfig config;

    if (!doc.contains("mesh") || !doc["mesh"].is_object())
        throw ConfigError("config: missing object 'mesh'");
    reject_unknown_keys(doc["mesh"], "mesh.", {"a", "b", "N"});
    config.mesh_a = require_number(doc["mesh"], "mesh.", "a");
    config.mesh_b = require_number(doc["mesh"], "mesh.", "b");
    config.mesh_n = require_int(doc["mesh"], "mesh.", "N");
    if (!(config.mesh_a < config.mesh_b))
        throw ConfigError("config: mesh.a must be < mesh.b");
    if (config.mesh_n < 1)
        throw ConfigError("config: mesh.N must be >= 1");

    if (doc.contains("degrees")) {
        reject_unknown_keys(doc["degrees"], "degrees.", {"k1", "k2"});
        config.k1 = require_int(doc["degrees"], "degrees.", "k1");
        config.k2 = require_int(doc["degrees"], "degrees.", "k2");
        if (config.k1 < 1 || config.k2 < 1)
            throw ConfigError("config: degrees.k1 and degrees.k2 must be >= 1");
    }

    if (doc.contains("material")) {
        reject_unknown_keys(doc["material"], "material.", {"c1", "c2"});
        config.c1 = require_number(doc["material"], "material.", "c1");
        config.c2 = require_number(doc["material"], "material.", "c2");
        if (!(config.c1 > 0.0) || !(config.c2 > 0.0))
            throw ConfigError("config: material.c1 and material.c2 must be > 0");
    }

    if (!doc.contains("flux") || !doc["flux"].is_object())
        throw ConfigError("config: missing object 'flux'");
    const json& flux_obj = doc["flux"];
    if (flux_obj.contains("preset")) {
        reject_unknown_keys(flux_obj, "flux.", {"preset"});
        if (!flux_obj["preset"].is_string())
            throw ConfigError("config: flux.preset must be a string");
        const std::string preset = flux_obj["preset"].get<std::string>();
        try {
            config.flux = flux_preset(preset);
        } catch (const std::invalid_argument& err) {
            throw ConfigError(std::string("config: flux.preset: ") + err.what());
        }
        config.flux_label = preset;
    } else {
        reject_unknown_keys(flux_obj, "flux.", {"beta", "tau", "xi"});
        config.flux.beta = require_number(flux_obj, "flux.", "beta");
        config.flux.tau = require_number(flux_obj, "flux.", "tau");
        config.flux.xi = require_number(flux_obj, "flux.", "xi");
        try {
            validate(config.flux);
        } catch (const std::invalid_argument& err) {
            throw ConfigError(std::string("config: flux: ") + err.what());
        }
        config.flux_label = "beta=" + std::to_string(config.flux.beta) +
                            ",tau=" + std::to_string(config.flux.tau) +
                            ",xi=" + std::to_string(config.flux.xi);
    }

    if (doc.contains("bc")) {
        reject_unknown_keys(doc["bc"], "bc.", {"left", "right"});
        config.bc.left = parse_kind(doc["bc"], "bc.", "left");
        config.bc.right = parse_kind(doc["bc"], "bc.", "right");
    }

    if (doc.contains("input")) {
        reject_unknown_keys(doc["input"], "input.", {"u1", "u2"});
        if (doc["input"].contains("u1")) {
            if (!doc["input"]["u1"].is_string())
                throw ConfigError("config: input.u1 must be a string");
            config.u1_spec = doc["input"]["u1"].get<std::string>();
        }
        if (doc["input"].contains("u2")) {
            if (!doc["input"]["u2"].is_string())
                throw ConfigError("config: input.u2 must be a string");
            config.u2_spec = doc["input"]["u2"].get<std::string>();
        }
        parse_signal(config.u1_spec); // validate now, not at first evaluation
        parse_signal(config.u2_spec);
    }

    if (!doc.contains("time") || !doc["time"].is_object())
        throw ConfigError("config: missing object 'time'");
    reject_unknown_keys(doc["time"], "time.", {"T", "dt", "output_every"});
    config.T = require_number(doc["time"], "time.", "T");
    config.dt = require_number(doc["time"], "time.", "dt");
    if (config.T < 0.0)
        throw ConfigError("config: time.T must be >= 0");
    if (!(config.dt > 0.0))
        throw ConfigError("config: time.dt must be > 0");
    if (doc["time"].contains("output_every")) {
        config.output_every = require_int(doc["time"], "time.", "output_every");
        if (config.output_every < 1)
            throw ConfigError("config: time.output_every must be >= 1");
    }

    if (doc.contains("snapshot_times")) {
        if (!doc["snapshot_times"].is_array())
            throw ConfigError("config: snapshot_times must be an array of numbers");
        for (const auto& entry : doc["snapshot_times"]) {
            if (!entry.is_number())
                throw ConfigError("config: snapshot_times must be an array of numbers");
            const double ts = entry.get<double>();
            if (ts < 0.0 || ts > config.T)
                throw ConfigError("config: snapshot time " + std::to_string(ts) +
                                  " outside [0, T]");
            config.snapshot_times.push_back(ts);
        }
    }

    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string())
            throw ConfigError("config: output_dir must be a string");
        config.output_dir = doc["output_dir"].get<std::string>();
    }

    return config;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace phdg

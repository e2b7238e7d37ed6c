// config.hpp — evaluation config files.
//
// Canonical schema (see README for the full reference):
//
//   [run]
//   master_seed = 42
//   q_seeds     = 10        # or: seeds = 17, 901, 4242
//   p_cascades  = 10
//   delta       = 3.3333333333333335
//   rate        = 3.0
//   tau         = 0.01
//   epsilon     = 0.05
//   rounds      = 6
//   seed_nodes  = 10
//
//   [graphs]
//   ring = ring_lattice:400:2       # synthetic spec kind:n:param
//   real = data/some_edges.txt      # or a file path, optionally "... undirected"
//
//   [models]
//   IC = IC phi_scale=0.5
//   DC = DC phi_scale=0.5 confirm_prob=0.5
//
// Unknown sections or keys are errors. When [models] is omitted all six
// standard models run with [run] defaults. When seeds are not listed,
// q_seeds values are sampled uniformly without replacement from
// [0, 2^20 - 1] using the master seed.

#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "motifdiff/diffusion.hpp"
#include "motifdiff/errors.hpp"
#include "motifdiff/graph.hpp"
#include "motifdiff/metrics.hpp"
#include "motifdiff/rng.hpp"

namespace motifdiff {

struct GraphEntry {
    std::string name;
    std::string spec; // synthetic spec string or file path
    StaticGraph graph;
};

struct ModelEntry {
    std::string name;
    ModelSpec spec;
};

struct RunConfig {
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> seeds;
    EvalConfig eval;
    std::vector<GraphEntry> graphs;
    std::vector<ModelEntry> models;
    std::string config_hash; // fnv-1a of the raw config bytes, hex
};

namespace detail {

struct CfgLine {
    std::string section;
    std::string key;
    std::string value;
    std::size_t line_no;
};

inline bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
            return false;
    return true;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<CfgLine> parse_cfg_lines(std::istream& in) {
    std::vector<CfgLine> out;
    std::string line, section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
        const std::string t = trim(sv);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError("unterminated section header", line_no);
            section = trim(std::string_view(t).substr(1, t.size() - 2));
            if (section.empty()) throw ParseError("empty section name", line_no);
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        CfgLine cl;
        cl.section = section;
        cl.key = trim(std::string_view(t).substr(0, eq));
        cl.value = trim(std::string_view(t).substr(eq + 1));
        cl.line_no = line_no;
        if (cl.key.empty()) throw ParseError("empty key", line_no);
        if (cl.section.empty()) throw ParseError("key before any [section]", line_no);
        out.push_back(std::move(cl));
    }
    return out;
}

inline std::uint64_t cfg_u64(const CfgLine& l) {
    std::uint64_t v = 0;
    if (!parse_u64(l.value, v))
        throw ConfigError(l.section + "." + l.key + ": expected a non-negative integer, got '" +
                          l.value + "'");
    return v;
}

inline double cfg_double(const CfgLine& l) {
    double v = 0.0;
    if (!parse_double(l.value, v))
        throw ConfigError(l.section + "." + l.key + ": expected a number, got '" + l.value + "'");
    return v;
}

inline std::vector<std::uint64_t> cfg_u64_list(const CfgLine& l) {
    std::string buf = l.value;
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::vector<std::uint64_t> out;
    for (auto tok : split_ws(buf)) {
        std::uint64_t v = 0;
        if (!parse_u64(tok, v))
            throw ConfigError(l.section + "." + l.key + ": bad integer '" + std::string(tok) +
                              "'");
        out.push_back(v);
    }
    return out;
}

// "KIND key=value ..." -> ModelSpec, starting from the run-level defaults
inline ModelSpec parse_model_value(const std::string& name, const std::string& value,
                                   const ModelSpec& defaults) {
    auto toks = split_ws(value);
    if (toks.empty()) throw ConfigError("models." + name + ": empty model spec");
    auto kind = model_kind_from(toks[0]);
    if (!kind)
        throw ConfigError("models." + name + ": unknown model kind '" + std::string(toks[0]) +
                          "' (want IC|WC|LT|SM|DC|BK)");
    ModelSpec m = defaults;
    m.kind = *kind;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto tok = toks[i];
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("models." + name + ": expected key=value, got '" +
                              std::string(tok) + "'");
        const auto key = tok.substr(0, eq);
        const std::string val(tok.substr(eq + 1));
        auto as_double = [&] {
            double v = 0.0;
            if (!parse_double(val, v))
                throw ConfigError("models." + name + "." + std::string(key) +
                                  ": expected a number, got '" + val + "'");
            return v;
        };
        auto as_int = [&] {
            std::uint64_t v = 0;
            if (!parse_u64(val, v))
                throw ConfigError("models." + name + "." + std::string(key) +
                                  ": expected an integer, got '" + val + "'");
            return static_cast<int>(v);
        };
        if (key == "phi_scale") m.phi_scale = as_double();
        else if (key == "confirm_prob") m.confirm_prob = as_double();
        else if (key == "bank_prob") m.bank_prob = as_double();
        else if (key == "friends_min") m.friends_min = as_int();
        else if (key == "friends_max") m.friends_max = as_int();
        else if (key == "rounds") m.rounds = as_int();
        else if (key == "seed_nodes") m.n_seed_nodes = as_int();
        else
            throw ConfigError("models." + name + ": unknown key '" + std::string(key) + "'");
    }
    try {
        m.validate();
    } catch (const ConfigError& e) {
        throw ConfigError("models." + name + ": " + e.what());
    }
    return m;
}

inline std::string fnv_hex(std::string_view bytes) {
    const std::uint64_t h = rng::hash_tag(bytes);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace detail

// Parses, validates and materializes a config. base_dir resolves relative
// graph file paths.
inline RunConfig load_config(std::istream& in, const std::filesystem::path& base_dir = {}) {
    std::ostringstream raw;
    raw << in.rdbuf();
    const std::string text = raw.str();
    std::istringstream replay(text);

    RunConfig rc;
    rc.config_hash = detail::fnv_hex(text);

    std::uint64_t q_seeds = 50;
    bool q_given = false, seeds_given = false;
    ModelSpec model_defaults; // rounds/seed_nodes from [run] flow into every model

    std::vector<detail::CfgLine> model_lines, graph_lines;
    for (const auto& l : detail::parse_cfg_lines(replay)) {
        if (l.section == "run") {
            if (l.key == "master_seed") rc.master_seed = detail::cfg_u64(l);
            else if (l.key == "q_seeds") { q_seeds = detail::cfg_u64(l); q_given = true; }
            else if (l.key == "seeds") { rc.seeds = detail::cfg_u64_list(l); seeds_given = true; }
            else if (l.key == "p_cascades") rc.eval.cascades_per_network =
                static_cast<int>(detail::cfg_u64(l));
            else if (l.key == "delta") rc.eval.delta = detail::cfg_double(l);
            else if (l.key == "rate") rc.eval.rate = detail::cfg_double(l);
            else if (l.key == "tau") rc.eval.tau = detail::cfg_double(l);
            else if (l.key == "epsilon") rc.eval.epsilon = detail::cfg_double(l);
            else if (l.key == "rounds") model_defaults.rounds = static_cast<int>(detail::cfg_u64(l));
            else if (l.key == "seed_nodes") model_defaults.n_seed_nodes =
                static_cast<int>(detail::cfg_u64(l));
            else throw ConfigError("run." + l.key + ": unknown key");
        } else if (l.section == "graphs") {
            graph_lines.push_back(l);
        } else if (l.section == "models") {
            model_lines.push_back(l);
        } else {
            throw ConfigError("[" + l.section + "]: unknown section");
        }
    }

    rc.eval.validate();
    model_defaults.validate();

    // graphs
    if (graph_lines.empty()) throw ConfigError("graphs: section missing or empty");
    std::set<std::string> names;
    for (const auto& l : graph_lines) {
        if (!detail::valid_name(l.key))
            throw ConfigError("graphs: bad name '" + l.key + "'");
        if (!names.insert(l.key).second)
            throw ConfigError("graphs." + l.key + ": duplicate name");
        GraphEntry ge;
        ge.name = l.key;
        auto toks = detail::split_ws(l.value);
        if (toks.empty()) throw ConfigError("graphs." + l.key + ": empty value");
        ge.spec = std::string(toks[0]);
        bool directed = true;
        if (toks.size() == 2 && toks[1] == "undirected") directed = false;
        else if (toks.size() > 1)
            throw ConfigError("graphs." + l.key + ": unexpected token '" +
                              std::string(toks[1]) + "'");
        const bool synthetic =
            ge.spec.find(':') != std::string::npos &&
            synthetic_kind_from(std::string_view(ge.spec).substr(0, ge.spec.find(':')))
                .has_value();
        if (synthetic) {
            ge.graph = graph_from_spec(ge.spec);
        } else {
            std::filesystem::path p(ge.spec);
            if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
            std::ifstream f(p);
            if (!f.good())
                throw ConfigError("graphs." + l.key + ": cannot open '" + p.string() + "'");
            try {
                ge.graph = parse_edge_list(f, directed);
            } catch (const ParseError& e) {
                throw ConfigError("graphs." + l.key + " (" + p.string() + "): " + e.what());
            }
        }
        rc.graphs.push_back(std::move(ge));
    }

    // models; all six standard ones when the section is absent
    if (model_lines.empty()) {
        for (ModelKind k : {ModelKind::IC, ModelKind::WC, ModelKind::LT, ModelKind::SM,
                            ModelKind::DC, ModelKind::BK}) {
            ModelSpec m = model_defaults;
            m.kind = k;
            rc.models.push_back({std::string(model_kind_name(k)), m});
        }
    } else {
        std::set<std::string> mnames;
        for (const auto& l : model_lines) {
            if (!detail::valid_name(l.key))
                throw ConfigError("models: bad name '" + l.key + "'");
            if (!mnames.insert(l.key).second)
                throw ConfigError("models." + l.key + ": duplicate name");
            rc.models.push_back({l.key, detail::parse_model_value(l.key, l.value,
                                                                  model_defaults)});
        }
    }

    // seeds
    if (seeds_given) {
        if (q_given) throw ConfigError("run: give either seeds or q_seeds, not both");
        std::set<std::uint64_t> uniq(rc.seeds.begin(), rc.seeds.end());
        if (uniq.size() != rc.seeds.size())
            throw ConfigError("run.seeds: duplicate seed values");
    } else {
        if (q_seeds < 2) throw ConfigError("run.q_seeds: need at least 2 seeds");
        rng::Hierarchy h(rc.master_seed);
        auto stream = h.derive({"seeds"});
        std::set<std::uint64_t> chosen;
        while (chosen.size() < q_seeds)
            chosen.insert(stream.uniform_below(std::uint64_t{1} << 20));
        rc.seeds.assign(chosen.begin(), chosen.end());
    }
    if (rc.seeds.size() < 2) throw ConfigError("run.seeds: need at least 2 seeds");

    return rc;
}

inline RunConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot open config '" + path.string() + "'");
    return load_config(in, path.parent_path());
}

} // namespace motifdiff

#include "hurwitz/format.hpp"

#include <sstream>

namespace hurwitz {

std::string endpoint_name(int endpoint) {
    if (endpoint == kMinusInfinity) return "-inf";
    if (endpoint == kPlusInfinity) return "+inf";
    return std::to_string(endpoint);
}

std::string cover_record(const TropicalCover& c) {
    std::ostringstream os;
    os << "cover\n";
    os << "genus " << c.genus() << "\n";
    os << "vertices";
    for (int v = 0; v < c.vertex_count(); ++v) os << ' ' << v;
    os << "\n";
    for (const Edge& e : c.edges()) {
        os << "edge " << e.weight << ' ' << endpoint_name(e.source) << ' ' << endpoint_name(e.target) << "\n";
    }
    os << "aut " << automorphism_count(c).get_str() << "\n";
    os << "mult_complex " << mult_complex(c).fraction_str() << "\n";
    os << "end\n";
    return os.str();
}

nlohmann::json partition_json(const Partition& p) { return nlohmann::json(p.parts()); }

nlohmann::json cover_json(const TropicalCover& c) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : c.edges()) {
        edges.push_back({{"weight", e.weight}, {"source", endpoint_name(e.source)}, {"target", endpoint_name(e.target)}});
    }
    std::vector<int> vertices;
    for (int v = 0; v < c.vertex_count(); ++v) vertices.push_back(v);
    return {
        {"genus", c.genus()},
        {"vertices", vertices},
        {"edges", edges},
        {"aut", automorphism_count(c).get_str()},
        {"mult_complex", mult_complex(c).fraction_str()},
    };
}

std::string cover_dot(const TropicalCover& c, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    for (int v = 0; v < c.vertex_count(); ++v) os << "  v" << v << " [label=\"x" << v + 1 << "\"];\n";
    int ends = 0;
    for (const Edge& e : c.edges()) {
        std::string from = "v" + std::to_string(e.source);
        std::string to = "v" + std::to_string(e.target);
        if (e.source == kMinusInfinity) {
            from = "end" + std::to_string(ends++);
            os << "  " << from << " [shape=point];\n";
        }
        if (e.target == kPlusInfinity) {
            to = "end" + std::to_string(ends++);
            os << "  " << to << " [shape=point];\n";
        }
        os << "  " << from << " -> " << to << " [label=\"" << e.weight << "\"" << (e.even() ? ", style=bold" : "")
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string colouring_record(const TropicalCover& c, const Colouring& rho) {
    std::ostringstream os;
    os << "colouring\n";
    const auto features = scf(c);
    for (std::size_t i = 0; i < rho.in_t.size(); ++i) {
        const auto& f = features[i];
        os << "t " << i << ' ' << (rho.in_t[i] ? 1 : 0) << ' ' << (f.is_cycle() ? "cycle" : "fork") << ' '
           << f.weight << "\n";
    }
    for (std::size_t k = 0; k < rho.component_colour.size(); ++k) {
        os << "colour " << k << ' ' << colour_name(rho.component_colour[k]) << "\n";
    }
    os << "mult_real " << mult_real(c, rho).get_str() << "\n";
    os << "end\n";
    return os.str();
}

nlohmann::json colouring_json(const TropicalCover& c, const Colouring& rho) {
    const auto features = scf(c);
    nlohmann::json t = nlohmann::json::array();
    for (std::size_t i = 0; i < rho.in_t.size(); ++i) {
        t.push_back({{"id", i},
                     {"kind", features[i].is_cycle() ? "cycle" : "fork"},
                     {"weight", features[i].weight},
                     {"in_t", static_cast<bool>(rho.in_t[i])}});
    }
    const auto comps = even_components(c, rho.in_t);
    nlohmann::json colours = nlohmann::json::array();
    for (std::size_t k = 0; k < rho.component_colour.size(); ++k) {
        colours.push_back({{"id", k}, {"edges", comps[k]}, {"colour", colour_name(rho.component_colour[k])}});
    }
    return {{"scf", t}, {"components", colours}, {"mult_real", mult_real(c, rho).get_str()}};
}

}  // namespace hurwitz

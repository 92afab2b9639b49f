// params_io.cpp — parameter files and quantity strings with unit suffixes
#include "becdeph/params_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace becdeph {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

double parse_quantity(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty quantity string");
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("not a number: '" + text + "'");
    std::string suffix = trim(std::string(end));
    if (suffix.empty()) return v;
    if (suffix == "nm") return v * 1e-9;
    if (suffix == "um") return v * 1e-6;
    if (suffix == "s") return v;
    if (suffix == "kg") return v;
    throw std::invalid_argument("unknown unit suffix '" + suffix + "' in '" + text + "'");
}

void apply_param(PhysicalParams& p, const std::string& key, const std::string& value) {
    if (key == "dimension") {
        const char* begin = value.c_str();
        char* end = nullptr;
        long d = std::strtol(begin, &end, 10);
        if (end == begin || !trim(std::string(end)).empty())
            throw std::invalid_argument("dimension must be an integer, got '" + value + "'");
        p.dimension = static_cast<int>(d);
        return;
    }
    double v = parse_quantity(value);
    if (key == "m_A") p.m_A = v;
    else if (key == "m_B") p.m_B = v;
    else if (key == "m_AB") p.m_AB = v;
    else if (key == "n3") p.n3 = v;
    else if (key == "a_B") p.a_B = v;
    else if (key == "a_AB") p.a_AB = v;
    else if (key == "a_perp_A") p.a_perp_A = v;
    else if (key == "a_perp_B") p.a_perp_B = v;
    else if (key == "a_z_A") p.a_z_A = v;
    else if (key == "a_z_B") p.a_z_B = v;
    else if (key == "sigma") p.sigma = v;
    else if (key == "L") p.L = v;
    else if (key == "omega0") p.omega0 = v;
    else throw std::invalid_argument("unknown parameter '" + key + "'");
}

void load_params_file(const std::string& path, PhysicalParams& p) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open parameter file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            apply_param(p, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

}  // namespace becdeph

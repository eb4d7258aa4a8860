#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace aul {

struct Rect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

/* Deterministic RNG. Same seed, same stream, everywhere. */
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }
    std::uint64_t next_below(std::uint64_t m) { return eng() % m; }
    double uniform01() { return (eng() >> 11) * 0x1.0p-53; }
};

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

inline std::string json_to_string(const nlohmann::json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

}  // namespace aul

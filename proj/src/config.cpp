#include "hrep/config.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#ifndef HREP_DATA_DIR
#define HREP_DATA_DIR "data"
#endif

namespace hrep {

std::string data_path(const std::string& name) {
    const char* env = std::getenv("HREP_DATA_DIR");
    std::string dir = env && *env ? env : HREP_DATA_DIR;
    return dir + "/" + name;
}

Caps load_caps(const std::string& path) {
    Caps c;
    std::ifstream in(path);
    if (!in)
        return c;
    json j = json::parse(in);
    const json& b = j.contains("caps") ? j.at("caps") : j;
    c.max_m = b.value("max_m", c.max_m);
    c.max_n = b.value("max_n", c.max_n);
    c.max_cutoff = b.value("max_cutoff", c.max_cutoff);
    c.max_genus = b.value("max_genus", c.max_genus);
    c.max_word_length = b.value("max_word_length", c.max_word_length);
    return c;
}

const Caps& caps() {
    static const Caps c = [] {
        const char* env = std::getenv("HREP_CONFIG");
        return load_caps(env && *env ? std::string(env) : data_path("config.json"));
    }();
    return c;
}

StoredCalibration load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open calibration file " + path);
    json j = json::parse(in);
    StoredCalibration s;
    s.version = j.at("version").get<int>();
    s.calibration = Calibration::from_json(j.at("calibration"));
    s.oracle_digest = j.value("oracle_digest", "");
    return s;
}

void store_calibration(const std::string& path, const StoredCalibration& c) {
    json j{{"version", c.version}, {"calibration", c.calibration.to_json()}, {"oracle_digest", c.oracle_digest}};
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write calibration file " + path);
    out << j.dump(2) << "\n";
}

const Calibration& active_calibration() {
    static const Calibration c = [] {
        std::ifstream probe(data_path("calibration.json"));
        if (!probe)
            return Calibration{};
        return load_calibration(data_path("calibration.json")).calibration;
    }();
    return c;
}

}  // namespace hrep

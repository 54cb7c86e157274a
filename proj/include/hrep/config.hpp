// Runtime configuration: data directory, bounds caps, stored calibration.
#pragma once

#include "hrep/forkcalc.hpp"
#include "hrep/groupring.hpp"

#include <string>

namespace hrep {

// $HREP_DATA_DIR if set, else the source tree's data/ directory.
std::string data_path(const std::string& name);

struct Caps {
    int max_m = 4;
    int max_n = 9;
    int max_cutoff = 9;
    int max_genus = 5;
    int max_word_length = 200;
};

// Loaded once from $HREP_CONFIG, else data/config.json; defaults if neither exists.
const Caps& caps();
Caps load_caps(const std::string& path);

struct StoredCalibration {
    int version = 0;
    Calibration calibration;
    std::string oracle_digest;
};

StoredCalibration load_calibration(const std::string& path);
void store_calibration(const std::string& path, const StoredCalibration& c);
// The calibration read from data/calibration.json (or the compiled-in default
// when the file is missing), cached on first use.
const Calibration& active_calibration();

}  // namespace hrep

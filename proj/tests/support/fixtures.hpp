#pragma once

#include <string>

#include "fbsel/io.hpp"

inline std::string data_path(const std::string& name) { return std::string(FBSEL_DATA_DIR) + "/" + name; }
inline std::string tmp_path(const std::string& name) { return std::string(FBSEL_TEST_TMP) + "/" + name; }

inline fbsel::Instance load_fixture(const std::string& name) { return fbsel::load_system(data_path(name)); }

#pragma once

#include "crn/io.hpp"

#include <string>

inline crn::KineticSystem load_fixture(const std::string& name) {
  return crn::load_network_file(std::string(CRN_FIXTURES_DIR) + "/" + name);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(CRN_FIXTURES_DIR) + "/" + name;
}

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace g2chev::testutil {

inline std::string golden_path(const std::string& name) {
  return std::string(G2CHEV_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nlohmann::json load_golden(const std::string& name) {
  return nlohmann::json::parse(read_file(golden_path(name)));
}

}  // namespace g2chev::testutil

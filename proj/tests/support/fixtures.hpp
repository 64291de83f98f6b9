#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef UEQ_FIXTURES_DIR
#error "UEQ_FIXTURES_DIR must be defined by the build"
#endif

namespace fixtures {

inline std::string read(const std::string& name) {
  std::string path = std::string(UEQ_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fixtures

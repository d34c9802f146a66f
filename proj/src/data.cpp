#include "affcells/data.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace affcells {

std::string load_data_file(std::string_view relative_path) {
  if (const char* dir = std::getenv("AFFCELLS_DATA")) {
    const std::filesystem::path p = std::filesystem::path(dir) / std::string(relative_path);
    if (std::ifstream in(p); in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }
  if (auto content = embedded_file(relative_path)) return std::string(*content);
  throw std::runtime_error("missing data file " + std::string(relative_path));
}

}  // namespace affcells

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affcells {

/// Data files compiled into the library, addressed as "orbits/G2.csv", "config/windows.json", ...
std::optional<std::string_view> embedded_file(std::string_view relative_path);
std::vector<std::string_view> embedded_files();

/// Reads a data file, preferring $AFFCELLS_DATA/<relative_path> when that variable is set.
/// Throws std::runtime_error when the file exists in neither place.
std::string load_data_file(std::string_view relative_path);

}  // namespace affcells

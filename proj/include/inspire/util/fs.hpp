#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace inspire::util {

void ensure_dir(const std::filesystem::path& dir);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// Regular files directly under dir, sorted by filename.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir);

}  // namespace inspire::util

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torsym/cli.hpp"

namespace harness {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

inline Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = torsym::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Directory for input files; TORSYM_SCRATCH wins over the system temp dir.
inline std::filesystem::path scratch_dir() {
  const char* env = std::getenv("TORSYM_SCRATCH");
  std::filesystem::path dir = env && *env ? std::filesystem::path(env)
                                          : std::filesystem::temp_directory_path() / "torsym-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string write_file(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Writes the catalog document for `args` and returns its path.
inline std::string catalog_file(const std::string& name, std::vector<std::string> args) {
  args.insert(args.begin(), "catalog");
  return write_file(name, run(args).out);
}

}  // namespace harness

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arith/cli.hpp"

namespace harness {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = arith::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(ARITH_GOLDEN_DIR) + "/" + name);
}

}  // namespace harness

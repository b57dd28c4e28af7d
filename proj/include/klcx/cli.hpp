#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace klcx::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadArguments = 2,
  kTruncation = 3,
  kResourceCap = 4,
};

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  bool affine = false;
  int max_length = -1;  // -1: subcommand default
  int degree_bound = 10;
  int degree = 0;
  int modulus = 0;  // 0: smallest non-exceptional l > h
  std::string format = "csv";
  std::string cache;
  int threads = 1;
  std::size_t max_elements = 5'000'000;
  std::size_t max_states = 50'000'000;
  std::string x, y;
  std::string kind = "ll";
  std::string sigma;
  int parts = 0;
  bool max_only = false;
  int xmax = 15;
  int nmax = 30;
};

/// Runs one subcommand; args excludes the program name. Records go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klcx::cli

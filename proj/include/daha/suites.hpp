#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "daha/report.hpp"

namespace daha {

struct CheckConfig {
  std::string suite = "all";
  int n = 3;         // checks run for every rank 2..n (1..n where meaningful)
  int d_max = 2;
  int ydeg = 4;      // y-degree cap for windows
  int x_radius = 2;  // coweight entries and x-windows are bounded by this
  std::uint64_t seed = 1;
  std::string out;
  double budget_ms = 0;  // per suite; 0 means unlimited
  bool record_timing = false;

  void validate() const;
};

const std::vector<std::string>& suite_names();
std::uint64_t suite_seed(std::uint64_t master, const std::string& suite);

// Portable draws: results depend only on the seed, not on the standard library.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi);
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

Report run_suite(const CheckConfig& cfg);

}  // namespace daha

#pragma once

// Property batteries behind `braidcount verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace braidcount::verify {

struct Limits {
  std::uint64_t max_x = 2000;  // counting: oracle comparisons up to this threshold
  unsigned max_len = 10;       // counting/words: word length for brute-force oracles
  unsigned conj_len = 4;       // classes: conjugator degree in the forbidden search
  unsigned pairs = 3;          // classes: largest family index j
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_words(const Limits& limits);
std::vector<CheckResult> run_braid(const Limits& limits);
std::vector<CheckResult> run_counting(const Limits& limits);
std::vector<CheckResult> run_classes(const Limits& limits);

// suite: all, words, braid, counting or classes.
std::vector<CheckResult> run_suite(const std::string& suite, const Limits& limits);

}  // namespace braidcount::verify

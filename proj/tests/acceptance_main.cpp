#include <cstring>
#include <iostream>
#include <string>

#include "optchan/verify.hpp"

// Prints one pass/fail line per acceptance criterion. With --criterion N only
// that criterion runs. Exit code 0 when every executed criterion passes,
// 1 otherwise.
int main(int argc, char** argv) {
  int only_id = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only_id = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (only_id < 0 || only_id > optchan::verify::criterion_count) {
    std::cerr << "criterion id out of range\n";
    return 2;
  }

  bool all_passed = true;
  for (const auto& result : optchan::verify::run_acceptance(only_id)) {
    all_passed = all_passed && result.passed;
    std::cout << (result.passed ? "PASS" : "FAIL") << " criterion " << result.id
              << ": " << result.name << " [" << result.detail << "]\n";
  }
  return all_passed ? 0 : 1;
}

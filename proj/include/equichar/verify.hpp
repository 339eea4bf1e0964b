#pragma once

#include <string>
#include <vector>

namespace equichar {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
  double seconds = 0;
};

// appendix: 1-4, maps: 5-8, stems: 9, all: 1-9.
std::vector<int> suite_criteria(const std::string& suite);
std::string criterion_title(int id);
CriterionResult run_criterion(int id, int threads = 1);

std::string to_text(const CriterionResult& r);

}  // namespace equichar

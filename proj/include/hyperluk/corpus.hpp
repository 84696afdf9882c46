#pragma once

#include <string>
#include <vector>

namespace hyperluk {

struct CorpusEntry {
  std::string name;
  std::string hypersequent;
  bool theorem = true;
};

// Standard theorems over closed atoms A, B, C and the predicate P, followed
// by non-theorem controls.
const std::vector<CorpusEntry>& standard_corpus();

}  // namespace hyperluk

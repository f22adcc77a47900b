#pragma once
// Regression corpus: every worked example with a known answer, each tagged
// with the result it reproduces.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "helix/helix_core.hpp"

namespace helix {

struct CorpusCase {
  std::string id;        ///< "<family>/<name>"; families group related examples
  std::string citation;  ///< the statement the expectation comes from
  /// nullopt on success, otherwise what went wrong.
  std::function<std::optional<std::string>()> check;
};

struct CorpusResult {
  std::string id;
  std::string citation;
  bool passed;
  std::string detail;
};

/// All cases, ordered by id.
std::vector<CorpusCase> corpus_cases();

/// A deliberately wrong expectation used to exercise the failure path.
CorpusCase injected_failure_case();

/// Runs the cases whose id contains `filter` (all when empty), ordered by id.
/// A case that throws counts as failed.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter);

/// The seeds (all with d > 2) appearing in the worked examples.
std::vector<Seed> corpus_seeds();

}  // namespace helix

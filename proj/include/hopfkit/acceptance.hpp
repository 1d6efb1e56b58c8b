#pragma once

// The reproducible acceptance suite shared by the test binary and the CLI.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// A built-in example: name as accepted by builtin_presentation, plus p.
struct CorpusEntry {
  std::string name;
  std::uint32_t p = 0;
  HopfPresentation h;
};

/// Group algebras of every built-in group over p in {3, 5, 7} with p ∤ |G|,
/// optionally followed by their duals.
std::vector<CorpusEntry> group_corpus(bool with_duals);

/// Number of criteria in the suite (1-based ids).
unsigned acceptance_count();
/// Runs the criteria listed in `only` (all when empty). One progress line
/// per finished criterion goes to `log` when it is non-null.
std::vector<CriterionResult> run_acceptance(std::span<const unsigned> only = {}, std::ostream* log = nullptr);
/// "PASS  3  title  (1.2 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace hopfkit

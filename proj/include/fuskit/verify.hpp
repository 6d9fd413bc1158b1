#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuskit/classify.hpp"
#include "fuskit/fusion_ring.hpp"

namespace fuskit {

// A corpus slot: either a ring or the reason it could not be loaded.
struct CorpusEntry {
  std::string name;
  std::optional<FusionRing> ring;
  std::string load_error;
};

std::vector<CorpusEntry> builtin_corpus();
// Every *.json file in dir, ordered by file name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct VerifyOptions {
  std::string only;  // check-id prefix; empty runs everything
  int jobs = 1;
};

// Names of every check the suite can emit, in output order.
const std::vector<std::string>& check_ids();

// Per-ring checks over the corpus plus the global checks. Reports come back
// sorted by (check, ring) whatever the job count.
std::vector<CheckReport> run_checks(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options);
// {"corpus":[names],"checks":[reports],"summary":{...},"pass":bool}
ojson verify_suite(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options);

// Everything "info" prints about a ring.
ojson ring_info(const FusionRing& ring);
// Everything "classify" prints about a ring.
ojson ring_classification(const FusionRing& ring);

}  // namespace fuskit

#include "fuskit/fuskit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fuskit/classify.hpp"
#include "fuskit/error.hpp"
#include "fuskit/families.hpp"
#include "fuskit/serialize.hpp"
#include "fuskit/structure.hpp"
#include "fuskit/verify.hpp"

struct fuskit_ring {
  fuskit::FusionRing ring;
};

namespace {

thread_local std::string last_error;

fuskit_status fail(fuskit_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
fuskit_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return FUSKIT_OK;
  } catch (const fuskit::Error& e) {
    return fail(static_cast<fuskit_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FUSKIT_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FUSKIT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FUSKIT_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw fuskit::Error(fuskit::Errc::InvalidArgument, std::string(what) + " is null");
}

std::string text(const fuskit::ojson& j) { return j.dump(2) + "\n"; }

nlohmann::json parse(const char* s) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw fuskit::Error(fuskit::Errc::ParseError, std::string("malformed json: ") + e.what());
  }
}

fuskit::Subring subring_from_labels(const fuskit::FusionRing& ring, const char* labels) {
  const auto j = parse(labels);
  if (!j.is_array()) throw fuskit::Error(fuskit::Errc::ParseError, "subring must be a json array of labels");
  std::vector<int> members;
  for (const auto& l : j) {
    if (!l.is_string()) throw fuskit::Error(fuskit::Errc::ParseError, "subring labels must be strings");
    members.push_back(ring.index_of(l.get<std::string>()));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!fuskit::is_subring(ring, members))
    throw fuskit::Error(fuskit::Errc::NotClosed, std::string("labels ") + labels + " do not form a subring");
  return fuskit::Subring{members};
}

}  // namespace

extern "C" {

const char* fuskit_version(void) { return "0.1.0"; }

const char* fuskit_status_name(fuskit_status status) {
  if (status == FUSKIT_OK) return "Ok";
  if (status == FUSKIT_E_INTERNAL) return "Internal";
  if (status >= 1 && status <= 20) return fuskit::errc_name(static_cast<fuskit::Errc>(status)).data();
  return "Unknown";
}

const char* fuskit_last_error(void) { return last_error.c_str(); }

void fuskit_string_free(char* s) { std::free(s); }

fuskit_status fuskit_ring_from_json(const char* json, fuskit_ring** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new fuskit_ring{fuskit::ring_from_text(json)};
  });
}

fuskit_status fuskit_ring_construct(const char* spec, fuskit_ring** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    // A bare family name is accepted as shorthand for {"family": name}.
    const bool bare = spec[0] != '{' && spec[0] != '"';
    const auto j = bare ? nlohmann::json(std::string(spec)) : parse(spec);
    *out = new fuskit_ring{fuskit::construct(j)};
  });
}

fuskit_status fuskit_ring_product(const fuskit_ring* a, const fuskit_ring* b, fuskit_ring** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new fuskit_ring{fuskit::deligne_product(a->ring, b->ring)};
  });
}

void fuskit_ring_free(fuskit_ring* ring) { delete ring; }

fuskit_status fuskit_ring_rank(const fuskit_ring* ring, size_t* out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = ring->ring.rank();
  });
}

fuskit_status fuskit_ring_to_json(const fuskit_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = dup(fuskit::ring_to_text(ring->ring));
  });
}

fuskit_status fuskit_ring_validate(const fuskit_ring* ring, int* pass, char** report) {
  return guarded([&] {
    require(ring, "ring");
    require(pass, "pass");
    require(report, "report");
    const auto r = fuskit::validate(ring->ring);
    *pass = r.pass() ? 1 : 0;
    *report = dup(text(fuskit::validation_to_json(r, ring->ring)));
  });
}

fuskit_status fuskit_ring_info(const fuskit_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = dup(text(fuskit::ring_info(ring->ring)));
  });
}

fuskit_status fuskit_ring_classify(const fuskit_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = dup(text(fuskit::ring_classification(ring->ring)));
  });
}

fuskit_status fuskit_ring_grading(const fuskit_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = dup(text(fuskit::grading_to_json(fuskit::universal_grading(ring->ring), ring->ring)));
  });
}

fuskit_status fuskit_ring_factorize(const fuskit_ring* ring, const char* a, const char* b, int* exact,
                                    char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(exact, "exact");
    require(out, "out");
    const auto& r = ring->ring;
    const fuskit::Subring sa = a ? subring_from_labels(r, a) : fuskit::adjoint_subring(r);
    const fuskit::Subring sb = b ? subring_from_labels(r, b) : fuskit::pointed_subring(r);
    const bool ok = fuskit::exact_factorization(r, sa, sb);
    fuskit::ojson j;
    j["ring"] = r.name();
    j["A"] = fuskit::labels_json(r, sa.basis);
    j["B"] = fuskit::labels_json(r, sb.basis);
    j["exact"] = ok;
    *exact = ok ? 1 : 0;
    *out = dup(text(j));
  });
}

fuskit_status fuskit_solve_lemma41(int bound, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto res = fuskit::lemma41_search(bound);
    fuskit::ojson pairs = fuskit::ojson::array();
    for (auto [x, y] : res.pairs) pairs.push_back({x, y});
    fuskit::ojson j;
    j["pairs"] = std::move(pairs);
    j["triples"] = res.triples;
    *out = dup(j.dump() + "\n");
  });
}

fuskit_status fuskit_verify(const char* corpus_dir, const char* only, int jobs, int* pass, char** out) {
  return guarded([&] {
    require(pass, "pass");
    require(out, "out");
    const auto corpus = corpus_dir ? fuskit::load_corpus(corpus_dir) : fuskit::builtin_corpus();
    fuskit::VerifyOptions options{only ? only : "", jobs};
    const auto j = fuskit::verify_suite(corpus, options);
    *pass = j["pass"].get<bool>() ? 1 : 0;
    *out = dup(text(j));
  });
}

}  // extern "C"

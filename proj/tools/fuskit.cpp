// fuskit command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuskit/fuskit.h"

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2 };

struct Failure {
  int code;
  std::string message;
};

struct RingHandle {
  fuskit_ring* p = nullptr;
  RingHandle() = default;
  RingHandle(const RingHandle&) = delete;
  RingHandle& operator=(const RingHandle&) = delete;
  ~RingHandle() { fuskit_ring_free(p); }
};

struct OwnedString {
  char* p = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { fuskit_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

// Errors while reading input are usage errors (2); anything later is a
// failed computation (1).
void check(fuskit_status s, int code) {
  if (s != FUSKIT_OK) throw Failure{code, std::string(fuskit_status_name(s)) + ": " + fuskit_last_error()};
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{usage, "cannot open " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void load(const std::string& path, RingHandle& ring) { check(fuskit_ring_from_json(slurp(path).c_str(), &ring.p), usage); }

// ---- text rendering -------------------------------------------------------

std::string scalar(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat(const nlohmann::ordered_json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_object() || (e.is_array() && !flat(e))) return false;
  return true;
}

std::string inline_array(const nlohmann::ordered_json& v) {
  if (!v.is_array()) return scalar(v);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + inline_array(v[i]);
  return out + "]";
}

void render(std::ostream& os, const nlohmann::ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      if (flat(e)) os << pad << k << ": " << inline_array(e) << "\n";
      else {
        os << pad << k << ":\n";
        render(os, e, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (flat(e)) os << pad << "- " << inline_array(e) << "\n";
      else {
        os << pad << "-\n";
        render(os, e, indent + 2);
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

std::string verify_table(const nlohmann::ordered_json& j) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : j["checks"]) width = std::max(width, c["check"].get<std::string>().size());
  for (const auto& c : j["checks"]) {
    const std::string name = c["check"].get<std::string>();
    os << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << name << std::string(width - name.size() + 2, ' ')
       << c["details"].value("ring", std::string()) << "\n";
    if (!c["pass"].get<bool>()) os << "      witness: " << inline_array(c["witness"]) << "\n";
  }
  const auto& s = j["summary"];
  os << s["passed"].get<std::size_t>() << "/" << s["total"].get<std::size_t>() << " checks passed\n";
  return os.str();
}

std::string as_text(const std::string& json, bool verify) {
  const auto j = nlohmann::ordered_json::parse(json);
  if (verify) return verify_table(j);
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuskit: fusion ring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format/--output follow the subcommand
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "write the report here instead of stdout");

  std::string input, input2, family, only, left, right;
  int bound = 10;
  int jobs = 1;

  auto* validate = app.add_subcommand("validate", "check every ring axiom");
  auto* info = app.add_subcommand("info", "dimensions, invertibles and grading order");
  auto* classify = app.add_subcommand("classify", "GNG type and family detectors");
  auto* grading = app.add_subcommand("grading", "universal grading");
  auto* factorize = app.add_subcommand("factorize", "test A B for an exact factorization");
  for (auto* sub : {validate, info, classify, grading, factorize})
    sub->add_option("input", input, "ring json file, '-' or nothing for stdin");
  factorize->add_option("--left", left, "json array of labels for A (default: adjoint subring)");
  factorize->add_option("--right", right, "json array of labels for B (default: pointed subring)");

  auto* construct = app.add_subcommand("construct", "build a family member");
  construct->add_option("--family", family, "family spec json or bare family name")->required();

  auto* product = app.add_subcommand("product", "Deligne product of two rings");
  product->add_option("first", input, "ring json file")->required();
  product->add_option("second", input2, "ring json file")->required();

  auto* lemma = app.add_subcommand("solve-lemma41", "integer solutions of the cosine equations");
  lemma->add_option("--bound", bound, "search bound (>= 10)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", only, "check-id prefix");
  verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);


  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  int code = ok;
  OwnedString result;
  try {
    if (*validate) {
      RingHandle ring;
      load(input, ring);
      int pass = 0;
      check(fuskit_ring_validate(ring.p, &pass, &result.p), check_failed);
      code = pass ? ok : check_failed;
    } else if (*info || *classify || *grading) {
      RingHandle ring;
      load(input, ring);
      const auto fn = *info ? fuskit_ring_info : *classify ? fuskit_ring_classify : fuskit_ring_grading;
      check(fn(ring.p, &result.p), check_failed);
    } else if (*factorize) {
      RingHandle ring;
      load(input, ring);
      int exact = 0;
      const fuskit_status s = fuskit_ring_factorize(ring.p, left.empty() ? nullptr : left.c_str(),
                                                    right.empty() ? nullptr : right.c_str(), &exact, &result.p);
      // bad --left/--right label lists are input errors
      const bool bad_labels = s == FUSKIT_E_PARSE || s == FUSKIT_E_UNKNOWN_ELEMENT || s == FUSKIT_E_NOT_CLOSED ||
                              s == FUSKIT_E_INVALID_ARGUMENT;
      check(s, bad_labels ? usage : check_failed);
      code = exact ? ok : check_failed;
    } else if (*construct) {
      RingHandle ring;
      check(fuskit_ring_construct(family.c_str(), &ring.p), usage);
      check(fuskit_ring_to_json(ring.p, &result.p), check_failed);
    } else if (*product) {
      RingHandle a, b, c;
      if ((input.empty() || input == "-") && (input2.empty() || input2 == "-"))
        throw Failure{usage, "only one input may come from stdin"};
      load(input, a);
      load(input2, b);
      check(fuskit_ring_product(a.p, b.p, &c.p), check_failed);
      check(fuskit_ring_to_json(c.p, &result.p), check_failed);
    } else if (*lemma) {
      check(fuskit_solve_lemma41(bound, &result.p), usage);
    } else if (*verify) {
      const char* corpus = std::getenv("FUSKIT_CORPUS");
      int pass = 0;
      check(fuskit_verify(corpus && *corpus ? corpus : nullptr, only.c_str(), jobs, &pass, &result.p), usage);
      code = pass ? ok : check_failed;
    }

    std::string text = result.str();
    if (format == "text" && !(*construct || *product)) text = as_text(text, verify->parsed());
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!(out << text)) throw Failure{usage, "cannot write " + output};
    }
  } catch (const Failure& f) {
    std::cerr << "fuskit: " << f.message << "\n";
    return f.code;
  }
  return code;
}

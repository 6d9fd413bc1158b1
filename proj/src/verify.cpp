#include "fuskit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "fuskit/error.hpp"
#include "fuskit/families.hpp"
#include "fuskit/serialize.hpp"

namespace fuskit {

namespace {

CorpusEntry entry(FusionRing ring) {
  std::string name = ring.name();
  return {std::move(name), std::move(ring), {}};
}

std::vector<int> group_members(const NamedGroup& g, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* l : labels) out.push_back(g.table.index_of(l));
  return out;
}

FusionRing gty_instance(const NamedGroup& g, std::initializer_list<const char*> gamma, const char* twist) {
  const auto gens = group_members(g, gamma);
  return gty(g, subgroup_generated(g.table, gens), g.table.index_of(twist));
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  const auto z = named_cyclic;
  std::vector<CorpusEntry> out;
  out.push_back(entry(fibonacci()));
  for (int n : {2, 4, 8}) out.push_back(entry(tambara_yamagami(z(n))));
  out.push_back(entry(near_group(z(2), 1)));
  out.push_back(entry(near_group(z(3), 2)));
  out.push_back(entry(gty_instance(z(4), {"2"}, "0")));
  out.push_back(entry(gty_instance(z(4), {"2"}, "1")));
  out.push_back(entry(gty_instance(z(6), {"3"}, "0")));
  out.push_back(entry(gty_instance(named_product(z(2), z(2)), {"(1,0)"}, "(0,1)")));
  out.push_back(entry(gty_instance(named_product(z(2), z(4)), {"(1,0)"}, "(0,1)")));
  out.push_back(entry(gty_instance(named_product(z(4), z(4)), {"(2,0)", "(0,2)"}, "(1,0)")));
  out.push_back(entry(psu2_6()));
  for (int k = 1; k <= 6; ++k) {
    out.push_back(entry(su2_level(k)));
    out.push_back(entry(adjoint_extract(su2_level(k))));
  }
  for (const auto& g : {z(1), z(2), z(3), z(4), named_product(z(2), z(2)), z(6), named_symmetric(3)})
    out.push_back(entry(fib_extension(g)));
  for (int n = 1; n <= 5; ++n) out.push_back(entry(n_ising(n)));
  out.push_back(entry(deligne_product(fibonacci(), pointed(z(5)))));
  out.push_back(entry(deligne_product(psu2_6(), pointed(z(3)))));
  out.push_back(entry(deligne_product(fibonacci(), fibonacci())));
  out.push_back(entry(pointed(z(3))));
  out.push_back(entry(pointed(named_symmetric(3))));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  if (ec) throw Error(Errc::InvalidArgument, "cannot read corpus directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    CorpusEntry e{f.stem().string(), std::nullopt, {}};
    try {
      e.ring = ring_from_text(buf.str());
      e.name = e.ring->name();
    } catch (const Error& err) {
      e.load_error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "ring-axioms",       "fpdim-exact",          "gng-rank-dim",          "stabilizer-conjugation",
      "gty-detectors",     "gty-grading-order",    "grading-dimensions",    "structure-theorem",
      "fib-extension-type", "fib-exact-factorization", "cosine-equations", "multiplicity-bound",
      "n-ising-invariants", "verlinde-psu2-6",
  };
  return ids;
}

namespace {

CheckReport make(const std::string& check, const std::string& ring) {
  CheckReport r{check, true, nullptr, ojson::object()};
  if (!ring.empty()) r.details["ring"] = ring;
  return r;
}

CheckReport failed(const std::string& check, const std::string& ring, const std::string& why) {
  CheckReport r = make(check, ring);
  r.pass = false;
  r.witness = why;
  return r;
}

struct Selector {
  std::string only;
  bool operator()(const std::string& id) const { return id.starts_with(only); }
};

bool non_pointed_gng(const FusionRing& ring) {
  try {
    return is_gng(ring);
  } catch (const Error& e) {
    if (e.code() == Errc::PointedInput) return false;
    throw;
  }
}

// Runs one check body, turning a library error into a failed report.
template <class F>
void attempt(std::vector<CheckReport>& out, const std::string& check, const std::string& ring, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(failed(check, ring, e.what()));
  }
}

std::vector<CheckReport> ring_checks(const CorpusEntry& e, const Selector& want) {
  std::vector<CheckReport> out;
  if (!e.ring) {
    out.push_back(failed("ring-axioms", e.name, "load error: " + e.load_error));
    return out;
  }
  const FusionRing& ring = *e.ring;
  const ValidationReport valid = validate(ring, ValidationMode::FastFail);
  if (!valid.pass()) {
    // Nothing else about an invalid ring is meaningful.
    const AxiomCheck& f = *valid.first_failure();
    CheckReport r = make("ring-axioms", e.name);
    r.pass = false;
    r.witness = labels_json(ring, f.witness);
    r.details["axiom"] = f.axiom;
    if (!f.detail.empty()) r.details["detail"] = f.detail;
    out.push_back(std::move(r));
    return out;
  }
  if (want("ring-axioms")) {
    CheckReport r = make("ring-axioms", e.name);
    r.details["rank"] = ring.rank();
    out.push_back(std::move(r));
  }

  std::optional<GNGType> type;
  attempt(out, "gng-rank-dim", e.name, [&] {
    if (non_pointed_gng(ring)) type = gng_type(ring);
  });

  if (type && want("gng-rank-dim")) attempt(out, "gng-rank-dim", e.name, [&] {
      CheckReport r = check_rank_dim(ring, *type);
      r.details.erase("ring");
      CheckReport named = make("gng-rank-dim", e.name);
      named.pass = r.pass;
      named.witness = r.witness;
      named.details.update(r.details);
      out.push_back(std::move(named));
    });

  if (want("stabilizer-conjugation")) attempt(out, "stabilizer-conjugation", e.name, [&] {
      // stab(g X) = g stab(X) g^-1 for every invertible g and simple X.
      const ActionData data = action(ring);
      const GroupTable& g = data.invertibles.group;
      CheckReport r = make("stabilizer-conjugation", e.name);
      for (int h = 0; h < static_cast<int>(g.order()) && r.pass; ++h)
        for (int i = 0; i < static_cast<int>(ring.rank()); ++i) {
          const int j = act(ring, data.invertibles.basis_index[static_cast<std::size_t>(h)], i);
          std::vector<int> conj;
          for (int s : data.stabilizers[static_cast<std::size_t>(i)].members)
            conj.push_back(g.mul(g.mul(h, s), g.inverse(h)));
          std::sort(conj.begin(), conj.end());
          if (conj != data.stabilizers[static_cast<std::size_t>(j)].members) {
            r.pass = false;
            r.witness = {g.label(h), ring.label(i)};
            break;
          }
        }
      r.details["invertibles"] = g.order();
      out.push_back(std::move(r));
    });

  bool gty_ring = false;
  attempt(out, "gty-detectors", e.name, [&] {
    const bool a = gty_by_kvec(ring);
    const bool b = gty_by_grading(ring);
    gty_ring = a && b;
    if (!want("gty-detectors")) return;
    CheckReport r = make("gty-detectors", e.name);
    r.pass = a == b;
    r.details["kvec_zero"] = a;
    r.details["two_dims_z2_graded"] = b;
    if (!r.pass) r.witness = "detectors disagree";
    out.push_back(std::move(r));
  });

  if (gty_ring && type && want("gty-grading-order")) attempt(out, "gty-grading-order", e.name, [&] {
      CheckReport r = make("gty-grading-order", e.name);
      const auto u = universal_grading(ring).group.order();
      const auto expected = 2 * type->group().order() / type->gamma.size();
      r.pass = u == expected;
      r.details["grading_order"] = u;
      r.details["expected"] = expected;
      if (!r.pass) r.witness = u;
      out.push_back(std::move(r));
    });

  if (want("grading-dimensions")) attempt(out, "grading-dimensions", e.name, [&] {
      CheckReport r = make("grading-dimensions", e.name);
      const GradingData grading = universal_grading(ring);
      const auto dims = graded_component_dims(grading, ring);
      const bool graded = is_grading(ring, grading);
      bool equal = true;
      for (std::size_t c = 0; c < dims.size(); ++c)
        if (!approx_equal(dims[c], dims.front())) {
          equal = false;
          if (r.witness.is_null()) r.witness = grading.group.label(static_cast<int>(c));
        }
      r.pass = graded && equal;
      r.details["grading_order"] = grading.group.order();
      r.details["component_dim"] = real_to_json(dims.front());
      r.details["is_grading"] = graded;
      out.push_back(std::move(r));
    });

  if (type && !type->k_zero() && want("structure-theorem"))
    attempt(out, "structure-theorem", e.name, [&] {
      CheckReport r = check_structure_theorem(ring);
      r.details.erase("ring");
      CheckReport named = make("structure-theorem", e.name);
      named.pass = r.pass;
      named.witness = r.witness;
      named.details.update(r.details);
      out.push_back(std::move(named));
    });

  if (want("fib-")) {
    std::optional<CheckReport> fib;
    attempt(out, "fib-extension-type", e.name, [&] {
      try {
        fib = classify_fib_extension(ring);
      } catch (const Error& err) {
        if (err.code() != Errc::NotFibExtension) throw;
      }
    });
    if (fib && want("fib-extension-type")) {
      fib->details.erase("ring");
      CheckReport named = make("fib-extension-type", e.name);
      named.pass = fib->pass;
      named.witness = fib->witness;
      named.details.update(fib->details);
      out.push_back(std::move(named));
    }
    if (fib && want("fib-exact-factorization")) attempt(out, "fib-exact-factorization", e.name, [&] {
        CheckReport r = make("fib-exact-factorization", e.name);
        const Subring f = adjoint_subring(ring);
        const Subring pt = pointed_subring(ring);
        r.pass = exact_factorization(ring, f, pt);
        r.details["fibonacci_part"] = labels_json(ring, f.basis);
        r.details["pointed_part"] = labels_json(ring, pt.basis);
        if (!r.pass) r.witness = "not an exact factorization";
        out.push_back(std::move(r));
      });
  }
  return out;
}

std::vector<CheckReport> global_checks(const Selector& want) {
  std::vector<CheckReport> out;
  if (want("fpdim-exact")) attempt(out, "fpdim-exact", "", [&] {
      CheckReport r = make("fpdim-exact", "");
      const FusionRing fib = fibonacci();
      const FusionRing psu = psu2_6();
      const struct {
        const char* what;
        RealValue got;
        QuadraticReal want;
      } cases[] = {
          {"fibonacci:X", fpdim_simple(fib, fib.index_of("X")), QuadraticReal(Rational(1, 2), Rational(1, 2), 5)},
          {"fibonacci", fpdim_ring(fib), QuadraticReal(Rational(5, 2), Rational(1, 2), 5)},
          {"psu2_6:X", fpdim_simple(psu, psu.index_of("X")), QuadraticReal(1, 1, 2)},
          {"psu2_6", fpdim_ring(psu), QuadraticReal(8, 4, 2)},
      };
      for (const auto& c : cases) {
        const bool ok = c.got.is_exact() && c.got.exact() == c.want;
        r.details[c.what] = real_to_json(c.got);
        if (!ok && r.witness.is_null()) r.witness = c.what;
        r.pass = r.pass && ok;
      }
      out.push_back(std::move(r));
    });

  if (want("cosine-equations")) attempt(out, "cosine-equations", "", [&] {
      CheckReport r = make("cosine-equations", "");
      for (int bound : {10, 25, 50}) {
        const CosineSolutions res = lemma41_search(bound);
        const bool ok = res.pairs == std::vector<std::pair<int, int>>{{3, 5}} && res.triples.empty();
        ojson pairs = ojson::array();
        for (auto [a, b] : res.pairs) pairs.push_back({a, b});
        r.details["bound_" + std::to_string(bound)] = {{"pairs", pairs}, {"triples", res.triples}};
        if (!ok && r.witness.is_null()) r.witness = bound;
        r.pass = r.pass && ok;
      }
      out.push_back(std::move(r));
    });

  if (want("multiplicity-bound")) attempt(out, "multiplicity-bound", "", [&] {
      CheckReport r = make("multiplicity-bound", "");
      const SummandSweep s = min_summands_sweep(128);
      const std::vector<std::int64_t> witness{2, 2};
      const bool has_witness = std::find(s.tight.begin(), s.tight.end(), witness) != s.tight.end();
      r.pass = s.violations.empty() && has_witness;
      r.details["vectors"] = s.vectors;
      r.details["violations"] = s.violations.size();
      r.details["tight"] = s.tight;
      if (!s.violations.empty()) r.witness = s.violations.front();
      out.push_back(std::move(r));
    });

  if (want("n-ising-invariants"))
    for (int n = 1; n <= 5; ++n) {
      const std::string name = "n_ising(" + std::to_string(n) + ")";
      attempt(out, "n-ising-invariants", name, [&] {
        CheckReport r = make("n-ising-invariants", name);
        const FusionRing ring = n_ising(n);
        const int half = 1 << (n - 1);
        const InvertibleGroup inv = invertibles(ring);
        const bool group_ok = is_isomorphic(inv.group, direct_product(cyclic(2), cyclic(half)));
        int root2 = 0, others = 0, self_dual = 0;
        for (int i = 0; i < static_cast<int>(ring.rank()); ++i) {
          if (inv.group_index[static_cast<std::size_t>(i)] >= 0) continue;
          const RealValue d = fpdim_simple(ring, i);
          if (d.is_exact() && d.exact() == QuadraticReal::sqrt(2)) ++root2;
          else ++others;
          if (ring.dual(i) == i) ++self_dual;
        }
        const bool grading_ok = is_isomorphic(universal_grading(ring).group, cyclic(2 * half));
        const bool dual_ok = n == 1 ? self_dual > 0 : self_dual == 0;
        r.pass = group_ok && root2 == half && others == 0 && grading_ok && dual_ok;
        r.details["invertibles_ok"] = group_ok;
        r.details["sqrt2_simples"] = root2;
        r.details["grading_cyclic"] = grading_ok;
        r.details["self_dual_non_invertibles"] = self_dual;
        if (!r.pass) r.witness = !group_ok ? "invertibles" : root2 != half || others ? "dimensions" : !grading_ok ? "grading" : "duality";
        out.push_back(std::move(r));
      });
    }

  if (want("verlinde-psu2-6")) attempt(out, "verlinde-psu2-6", "", [&] {
      CheckReport r = make("verlinde-psu2-6", "");
      const FusionRing ad = adjoint_extract(su2_level(6));
      const FusionRing psu = psu2_6();
      const auto iso = find_ring_isomorphism(ad, psu);
      r.pass = iso.has_value();
      if (iso) {
        ojson map = ojson::object();
        for (int i = 0; i < static_cast<int>(ad.rank()); ++i)
          map[ad.label(i)] = psu.label((*iso)[static_cast<std::size_t>(i)]);
        r.details["relabeling"] = map;
      } else {
        r.witness = "no constants-preserving bijection";
      }
      out.push_back(std::move(r));
    });
  return out;
}

std::string ring_of(const CheckReport& r) { return r.details.value("ring", std::string()); }

}  // namespace

std::vector<CheckReport> run_checks(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  const Selector want{options.only};
  std::vector<std::vector<CheckReport>> per_ring(corpus.size());
  const int jobs = std::clamp(options.jobs, 1, 64);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) per_ring[i] = ring_checks(corpus[i], want);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  std::vector<CheckReport> out = global_checks(want);
  worker();
  for (auto& t : pool) t.join();

  for (auto& reports : per_ring)
    for (auto& r : reports)
      if (want(r.check) || !r.pass) out.push_back(std::move(r));
  const auto& ids = check_ids();
  const auto rank = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) - ids.begin(); };
  std::stable_sort(out.begin(), out.end(), [&](const CheckReport& a, const CheckReport& b) {
    const auto ra = rank(a.check), rb = rank(b.check);
    if (ra != rb) return ra < rb;
    return ring_of(a) < ring_of(b);
  });
  return out;
}

ojson verify_suite(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  const auto reports = run_checks(corpus, options);
  ojson out;
  ojson names = ojson::array();
  for (const auto& e : corpus) names.push_back(e.name);
  out["corpus"] = std::move(names);
  ojson checks = ojson::array();
  ojson failures = ojson::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    checks.push_back(report_to_json(r));
    if (r.pass) ++passed;
    else failures.push_back(ring_of(r).empty() ? r.check : r.check + ":" + ring_of(r));
  }
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed},
                    {"failures", failures}};
  out["pass"] = passed == reports.size();
  return out;
}

// ---------------------------------------------------------------------------

ojson ring_info(const FusionRing& ring) {
  ojson out;
  out["name"] = ring.name();
  out["rank"] = ring.rank();
  out["unit"] = ring.label(ring.unit());
  out["commutative"] = is_commutative(ring);
  ojson dims = ojson::object();
  const auto& d = fpdims(ring);
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i) dims[ring.label(i)] = real_to_json(d[static_cast<std::size_t>(i)]);
  out["fpdims"] = std::move(dims);
  out["fpdim"] = real_to_json(fpdim_ring(ring));
  out["type"] = format_type(ring_type(ring));
  std::vector<int> inv;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i)
    if (is_invertible(ring, i)) inv.push_back(i);
  out["invertibles"] = labels_json(ring, inv);
  out["pointed"] = inv.size() == ring.rank();
  out["adjoint"] = labels_json(ring, adjoint_subring(ring).basis);
  try {
    out["grading_order"] = universal_grading(ring).group.order();
  } catch (const Error& e) {
    out["grading_order"] = nullptr;
  }
  return out;
}

ojson ring_classification(const FusionRing& ring) {
  ojson out;
  out["name"] = ring.name();
  const auto cd = cd_set(ring);
  ojson cdj = ojson::array();
  for (const auto& v : cd) cdj.push_back(real_to_json(v));
  out["cd"] = std::move(cdj);
  out["category_type"] = format_type(ring_type(ring));
  const bool pointed = cd.size() == 1 && approx_equal(cd.front(), RealValue(QuadraticReal(1)));
  out["pointed"] = pointed;
  out["near_group"] = !pointed && is_near_group(ring);
  out["gng"] = !pointed && is_gng(ring);
  if (out["gng"].get<bool>()) {
    const GNGType t = gng_type(ring);
    ojson type;
    type["G_order"] = t.group().order();
    type["G_abelian"] = t.group().is_abelian();
    type["G_cyclic"] = is_cyclic(t.group());
    type["G"] = t.invertibles.group.labels();
    std::vector<int> gamma;
    for (int g : t.gamma.members) gamma.push_back(t.invertibles.basis_index[static_cast<std::size_t>(g)]);
    type["Gamma"] = labels_json(ring, gamma);
    type["Gamma_order"] = t.gamma.size();
    ojson k = ojson::array();
    ojson kvec = ojson::object();
    for (int i = 0; i < static_cast<int>(ring.rank()); ++i)
      if (t.kvec.contains(ring.label(i))) {
        k.push_back(t.kvec.at(ring.label(i)));
        kvec[ring.label(i)] = t.kvec.at(ring.label(i));
      }
    type["k"] = std::move(k);
    type["kvec"] = std::move(kvec);
    out["type"] = std::move(type);
    out["rank_dim"] = report_to_json(check_rank_dim(ring, t));
  } else {
    out["type"] = nullptr;
  }
  out["gty"] = is_gty(ring);
  try {
    out["fib_extension"] = report_to_json(classify_fib_extension(ring));
  } catch (const Error& e) {
    if (e.code() != Errc::NotFibExtension) throw;
    out["fib_extension"] = nullptr;
  }
  return out;
}

}  // namespace fuskit

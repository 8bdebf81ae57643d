#include "depthlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "depthlab/depth_formula.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/homology.hpp"
#include "depthlab/instance_file.hpp"
#include "depthlab/resolution.hpp"

namespace depthlab {

const char* check_result_name(CheckResult r) {
  switch (r) {
    case CheckResult::Holds: return "holds";
    case CheckResult::Fails: return "fails";
    case CheckResult::Inconclusive: return "inconclusive";
    case CheckResult::Skipped: return "skipped";
  }
  return "?";
}

namespace {

constexpr int kDmax = 12;           // Hilbert-function cutoff for comparisons
constexpr int kSearchDegree = 3;    // regular-element search degree ceiling
constexpr int kSearchTrials = 40;   // samples per degree
constexpr int kBalanceDepth = 3;    // Tor indices compared for balance

struct Eval {
  CheckResult result;
  std::string detail;
  bool kernel_suspect = false;
};

Eval holds() { return {CheckResult::Holds, "", false}; }
Eval skipped(std::string why) { return {CheckResult::Skipped, std::move(why), false}; }
Eval inconclusive(std::string why) {
  return {CheckResult::Inconclusive, std::move(why), false};
}
Eval fails(std::string why, bool suspect) {
  return {CheckResult::Fails, std::move(why), suspect};
}

FPModule ring_module(const RingPtr& r) {
  return FPModule(r, FreeModule::of_rank(1), {});
}

// Rebuilds a structurally identical module over `ring` so every module of a
// reduced computation shares one ring object.
FPModule rebase(const RingPtr& ring, const FPModule& m) {
  Ring::require_same(ring, m.ring());
  return FPModule(ring, m.cover(), m.relations());
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = a * 0x9E3779B97F4A7C15ULL + b + 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 31;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 29;
  return h;
}

// Degreewise Hilbert-function equality up to kDmax.
bool same_hilbert(const FPModule& a, const FPModule& b) {
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az || bz) return az == bz;
  int lo = std::min(a.min_twist(), b.min_twist());
  for (int d = lo; d <= kDmax; ++d)
    if (a.hilbert_value(d) != b.hilbert_value(d)) return false;
  return true;
}

// Shared per-instance state: the defect record and tensor product are
// computed once; everything else on demand.
struct Ctx {
  const Instance* inst = nullptr;
  std::uint64_t seed = 0;
  int bound = 0;

  bool ok = false;
  bool internal_error = false;  // the kernel's cross-checks disagreed
  std::string error;            // diagnostic when !ok

  std::optional<FPModule> rmod;
  std::optional<DefectRecord> rec;
  std::optional<FPModule> tensor;

  std::optional<bool> tor1_zero_cache;
  std::optional<int> ring_depth_cache;

  bool tor1_zero() {
    if (!tor1_zero_cache)
      tor1_zero_cache = tor(inst->M, inst->N, 1).is_zero();
    return *tor1_zero_cache;
  }
  int ring_depth() {
    if (!ring_depth_cache) ring_depth_cache = rmod->depth();
    return *ring_depth_cache;
  }
  bool ring_cm() { return ring_depth() == inst->ring->krull_dim(); }
  // Complete intersection: the defining relations cut the dimension by
  // exactly their number (true in particular for polynomial rings).
  bool ring_ci() const {
    const Ring& r = *inst->ring;
    return r.krull_dim() ==
           r.nvars() - static_cast<int>(r.relations().size());
  }
};

Ctx build_ctx(const Instance& inst, int bound, std::uint64_t seed) {
  Ctx c;
  c.inst = &inst;
  c.seed = seed;
  c.bound = bound > 0 ? bound : default_tor_bound(inst.ring->nvars());
  c.rmod = ring_module(inst.ring);
  try {
    c.rec = depth_formula_defect(inst.M, inst.N, c.bound);
    c.tensor = tensor_product(inst.M, inst.N);
    c.ok = true;
  } catch (const InternalError& e) {
    c.internal_error = true;
    c.error = e.what();
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

std::string render_instance(const Ctx& c) {
  InstanceFile file;
  file.ring = c.inst->ring;
  file.modules.emplace_back("M", c.inst->M);
  file.modules.emplace_back("N", c.inst->N);
  file.pairs.emplace_back("M", "N");
  file.options.bound = c.bound;
  return serialize_instance_file(file);
}

// ---- individual checks ----------------------------------------------------

Eval check_depth_double_oracle(Ctx& c) {
  if (!c.ok) {
    if (c.internal_error)
      return fails("internal depth-oracle disagreement: " + c.error, true);
    return inconclusive("context unavailable: " + c.error);
  }
  // The four depths in the record were each computed by two independent
  // routes that agreed; reaching this point is the certificate.
  return holds();
}

Eval check_tor_balance(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const int top = std::min(kBalanceDepth, c.bound);
  for (int i = 0; i <= top; ++i) {
    FPModule a = tor(c.inst->M, c.inst->N, i);
    FPModule b = tor(c.inst->N, c.inst->M, i);
    if (!same_hilbert(a, b))
      return fails("Tor_" + std::to_string(i) +
                       " differs between the two argument orders",
                   true);
  }
  return holds();
}

Eval check_resolution_certificates(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const struct { const char* name; const FPModule* m; } jobs[] = {
      {"M", &c.inst->M}, {"N", &c.inst->N}};
  for (const auto& job : jobs) {
    auto res = job.m->resolution(c.bound);
    ResolutionCertificate cert = verify_resolution(*res, *job.m);
    if (!cert.ok()) {
      std::string what;
      if (!cert.composites_zero) what = "nonzero composite";
      else if (!cert.entries_in_maximal_ideal) what = "unit entry";
      else if (!cert.exact) what = "exactness gap";
      else what = "wrong presented module";
      return fails(std::string("resolution of ") + job.name + ": " + what, true);
    }
  }
  return holds();
}

Eval check_depth_formula(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const DefectRecord& r = *c.rec;
  if (r.tor_verdict.outcome == Outcome::Fails)
    return skipped("pair is not Tor-independent");
  if (r.tor_verdict.outcome == Outcome::Inconclusive)
    return inconclusive("Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  if (r.defect == 0) return holds();
  return fails("defect " + std::to_string(r.defect) + " on depths (" +
                   std::to_string(r.depth_m) + "," + std::to_string(r.depth_n) +
                   "," + std::to_string(r.depth_r) + "," +
                   std::to_string(r.depth_tensor) + ")",
               c.ring_ci());
}

Eval check_main_inequality(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  if (!c.ring_cm()) return skipped("ring is not Cohen-Macaulay");
  if (c.ring_depth() < 1) return skipped("ring has depth 0");
  const DefectRecord& r = *c.rec;
  if (r.tor_verdict.outcome == Outcome::Fails)
    return skipped("pair is not Tor-independent");
  if (r.tor_verdict.outcome == Outcome::Inconclusive)
    return inconclusive("Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  if (r.depth_r + r.depth_tensor >= r.depth_m + r.depth_n) return holds();
  return fails("depth R + depth tensor < depth M + depth N: " +
                   std::to_string(r.depth_r) + "+" +
                   std::to_string(r.depth_tensor) + " < " +
                   std::to_string(r.depth_m) + "+" + std::to_string(r.depth_n),
               c.ring_ci());
}

Eval check_depth_positivity(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  if (c.rec->depth_m == 0) return skipped("depth M = 0");
  if (!c.tor1_zero()) return skipped("Tor_1(M,N) != 0");
  const bool tensor_positive = c.rec->depth_tensor > 0;
  if (tensor_positive) {
    // Forward direction: an element regular on both M and M o N must
    // kill Tor_1(M/xM, N).
    auto found = find_regular_element({c.inst->M, *c.tensor}, kSearchDegree,
                                      kSearchTrials, mix(c.seed, 0xD1));
    if (!found.found())
      return inconclusive("no element regular on M and the tensor was found");
    FPModule mbar = quotient_mod_element(c.inst->M, *found.element,
                                         QuotientRing::Same);
    if (tor(mbar, c.inst->N, 1).is_zero()) return holds();
    return fails("Tor_1(M/xM, N) != 0 for x regular on M and the tensor", true);
  }
  // depth(M o N) = 0: no M-regular witness may kill Tor_1, otherwise the
  // converse direction would force positive depth.
  auto found = find_regular_element({c.inst->M}, kSearchDegree, kSearchTrials,
                                    mix(c.seed, 0xD2));
  if (!found.found())
    return inconclusive("no M-regular element was found");
  FPModule mbar = quotient_mod_element(c.inst->M, *found.element,
                                       QuotientRing::Same);
  if (tor(mbar, c.inst->N, 1).is_zero())
    return fails(
        "Tor_1(M/xM, N) = 0 for an M-regular x although depth(M o N) = 0",
        true);
  return holds();
}

Eval check_gdim_dichotomy(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  if (!c.tor1_zero()) return skipped("Tor_1(M,N) != 0");
  if (c.rec->depth_m <= c.rec->depth_tensor) return holds();
  FPModule sn = syzygy_module(c.inst->N, 1);
  if (sn.is_zero())
    return fails("depth M > depth(M o N) although N is free", true);
  const int got = tensor_product(c.inst->M, sn).depth();
  if (got == c.rec->depth_tensor + 1) return holds();
  return fails("depth(M o syzygy(N)) = " + std::to_string(got) +
                   ", expected " + std::to_string(c.rec->depth_tensor + 1),
               true);
}

Eval check_reduction_roundtrip(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const DefectRecord& r = *c.rec;
  if (r.tor_verdict.outcome == Outcome::Fails)
    return skipped("pair is not Tor-independent");
  if (r.tor_verdict.outcome == Outcome::Inconclusive)
    return inconclusive("Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  if (r.depth_r < 1 || r.depth_m < 1 || r.depth_n < 1 || r.depth_tensor < 1)
    return skipped("a depth is 0, nothing to reduce");
  try {
    ReductionStep step =
        reduce_pair(c.inst->M, c.inst->N, mix(c.seed, 0xA1), c.bound);
    // reduce_pair certifies the depth drops and reduced Tor-independence;
    // double-check the recorded ring really lost one depth.
    const int before = c.ring_depth();
    const int after = ring_module(step.ring_after).depth();
    if (after != before - 1)
      return fails("reduced ring depth " + std::to_string(after) +
                       ", expected " + std::to_string(before - 1),
                   true);
    return holds();
  } catch (const SearchExhausted&) {
    return inconclusive("regular-element search exhausted");
  } catch (const PreconditionError& e) {
    return skipped(std::string("precondition: ") + e.what());
  }
}

Eval check_corollary_reduct(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const DefectRecord& r = *c.rec;
  if (r.tor_verdict.outcome == Outcome::Fails)
    return skipped("pair is not Tor-independent");
  if (r.tor_verdict.outcome == Outcome::Inconclusive)
    return inconclusive("Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  if (c.ring_depth() <= std::max(r.depth_m, r.depth_n))
    return skipped("depth R does not exceed both module depths");
  FPModule sm = syzygy_module(c.inst->M, 1);
  FPModule sn = syzygy_module(c.inst->N, 1);
  if (sm.is_zero() || sn.is_zero())
    return fails("a module with depth below depth R is free", true);
  FPModule smsn = tensor_product(sm, sn);
  auto found = find_regular_element({*c.rmod, sm, sn, smsn}, kSearchDegree,
                                    kSearchTrials, mix(c.seed, 0xB7));
  if (!found.found()) {
    if (found.failure == SearchFailure::DepthZeroWitness)
      return fails("a first syzygy (or their tensor) has depth 0", true);
    return inconclusive("regular-element search exhausted");
  }
  RingPtr rbar = c.inst->ring->quotient_by(*found.element);
  FPModule x = rebase(rbar,
                      quotient_mod_element(sm, *found.element, QuotientRing::Reduced));
  FPModule y = rebase(rbar,
                      quotient_mod_element(sn, *found.element, QuotientRing::Reduced));
  TorVerdict tv = is_tor_independent(x, y, c.bound);
  if (tv.outcome == Outcome::Fails)
    return fails("reduced syzygy pair is not Tor-independent", true);
  if (tv.outcome == Outcome::Inconclusive)
    return inconclusive("reduced Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  const int dx = x.depth(), dy = y.depth();
  if (dx != r.depth_m || dy != r.depth_n)
    return fails("reduced syzygy depths (" + std::to_string(dx) + "," +
                     std::to_string(dy) + "), expected (" +
                     std::to_string(r.depth_m) + "," +
                     std::to_string(r.depth_n) + ")",
                 true);
  return holds();
}

Eval check_les_window(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  auto found = find_regular_element({*c.rmod}, kSearchDegree, kSearchTrials,
                                    mix(c.seed, 0xE5));
  if (!found.found()) {
    if (found.failure == SearchFailure::DepthZeroWitness)
      return skipped("ring has depth 0");
    return inconclusive("no ring-regular element was found");
  }
  SeqVerdict v = les_check_spect(c.inst->N, c.inst->M, *found.element,
                                 /*p_max=*/4, kDmax);
  if (v.outcome == Outcome::Holds) return holds();
  return fails("long-exact-sequence window broke at p=" +
                   std::to_string(v.fail_p) + ", degree " +
                   std::to_string(v.fail_degree) +
                   (v.note.empty() ? "" : " (" + v.note + ")"),
               true);
}

Eval check_cor_window(Ctx& c) {
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const DefectRecord& r = *c.rec;
  if (r.tor_verdict.outcome == Outcome::Fails)
    return skipped("pair is not Tor-independent");
  if (r.tor_verdict.outcome == Outcome::Inconclusive)
    return inconclusive("Tor-independence unresolved at bound " +
                        std::to_string(c.bound));
  auto found = find_regular_element({*c.rmod, c.inst->M}, kSearchDegree,
                                    kSearchTrials, mix(c.seed, 0xC9));
  if (!found.found()) {
    if (found.failure == SearchFailure::DepthZeroWitness)
      return skipped("ring or M has depth 0");
    return inconclusive("no element regular on R and M was found");
  }
  try {
    SeqVerdict v = cor_spect_check(c.inst->N, c.inst->M, *found.element,
                                   /*p_max=*/4, kDmax);
    if (v.outcome == Outcome::Holds) return holds();
    return fails("four-term window broke at p=" + std::to_string(v.fail_p) +
                     ", degree " + std::to_string(v.fail_degree) +
                     (v.note.empty() ? "" : " (" + v.note + ")"),
                 true);
  } catch (const InputError& e) {
    return skipped(std::string("precondition: ") + e.what());
  }
}

Eval check_fixture_expectations(Ctx& c) {
  const Instance& inst = *c.inst;
  const bool any = inst.expect_depth_m || inst.expect_depth_n ||
                   inst.expect_depth_r || inst.expect_depth_tensor ||
                   inst.expect_defect || inst.expect_tor;
  if (!any) return skipped("no frozen expectations");
  if (!c.ok) return inconclusive("context unavailable: " + c.error);
  const DefectRecord& r = *c.rec;
  auto bad = [](const char* what, int got, int want) {
    return fails(std::string(what) + " = " + std::to_string(got) +
                     ", fixture expects " + std::to_string(want),
                 true);
  };
  if (inst.expect_depth_m && r.depth_m != *inst.expect_depth_m)
    return bad("depth M", r.depth_m, *inst.expect_depth_m);
  if (inst.expect_depth_n && r.depth_n != *inst.expect_depth_n)
    return bad("depth N", r.depth_n, *inst.expect_depth_n);
  if (inst.expect_depth_r && r.depth_r != *inst.expect_depth_r)
    return bad("depth R", r.depth_r, *inst.expect_depth_r);
  if (inst.expect_depth_tensor && r.depth_tensor != *inst.expect_depth_tensor)
    return bad("depth tensor", r.depth_tensor, *inst.expect_depth_tensor);
  if (inst.expect_defect && r.defect != *inst.expect_defect)
    return bad("defect", r.defect, *inst.expect_defect);
  if (inst.expect_tor && r.tor_verdict.outcome != *inst.expect_tor)
    return fails(std::string("Tor verdict ") +
                     outcome_name(r.tor_verdict.outcome) + ", fixture expects " +
                     outcome_name(*inst.expect_tor),
                 true);
  return holds();
}

using CheckFn = Eval (*)(Ctx&);

struct CheckSpec {
  const char* name;
  CheckFn fn;
};

const CheckSpec kChecks[] = {
    {"depth_double_oracle", check_depth_double_oracle},
    {"tor_balance", check_tor_balance},
    {"resolution_certificates", check_resolution_certificates},
    {"depth_formula", check_depth_formula},
    {"main_inequality", check_main_inequality},
    {"depth_positivity", check_depth_positivity},
    {"gdim_dichotomy", check_gdim_dichotomy},
    {"reduction_roundtrip", check_reduction_roundtrip},
    {"corollary_reduct", check_corollary_reduct},
    {"les_window", check_les_window},
    {"cor_window", check_cor_window},
    {"fixture_expectations", check_fixture_expectations},
};

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : kChecks) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

SuiteReport run_lemma_suite(const std::vector<InstanceFamily>& families,
                            const std::vector<std::string>& checks, int bound) {
  // Resolve the check list.
  std::vector<CheckSpec> selected;
  if (checks.empty()) {
    for (const auto& spec : kChecks) selected.push_back(spec);
  } else {
    for (const std::string& name : checks) {
      const CheckSpec* hit = nullptr;
      for (const auto& spec : kChecks)
        if (name == spec.name) hit = &spec;
      if (!hit) throw NameError("unknown check name '" + name + "'");
      selected.push_back(*hit);
    }
  }

  SuiteReport report;
  report.bound = bound > 0 ? bound : 0;
  for (const auto& spec : selected) {
    report.checks.emplace_back(spec.name);
    CheckTally tally;
    tally.check = spec.name;
    report.tallies.push_back(std::move(tally));
  }

  std::vector<Instance> instances;
  for (const InstanceFamily& fam : families) {
    std::vector<Instance> batch = build_family(fam);
    for (auto& inst : batch) instances.push_back(std::move(inst));
  }
  report.instance_count = static_cast<int>(instances.size());

  std::vector<double> check_seconds(selected.size(), 0.0);
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& inst = instances[idx];
    report.instances.push_back(inst.name);
    Ctx ctx = build_ctx(inst, bound, mix(0x5017E, idx));
    std::string serialized;  // rendered at most once per instance
    for (std::size_t k = 0; k < selected.size(); ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      Eval ev;
      try {
        ev = selected[k].fn(ctx);
      } catch (const InternalError& e) {
        ev = fails(std::string("internal inconsistency: ") + e.what(), true);
      } catch (const Error& e) {
        ev = inconclusive(std::string("error: ") + e.what());
      }
      const auto t1 = std::chrono::steady_clock::now();
      check_seconds[k] += std::chrono::duration<double>(t1 - t0).count();
      CheckTally& tally = report.tallies[k];
      switch (ev.result) {
        case CheckResult::Holds: ++tally.holds; break;
        case CheckResult::Fails: ++tally.fails; break;
        case CheckResult::Inconclusive: ++tally.inconclusive; break;
        case CheckResult::Skipped: ++tally.skipped; break;
      }
      if (ev.result == CheckResult::Fails) {
        if (serialized.empty()) serialized = render_instance(ctx);
        FailingTranscript ft;
        ft.check = selected[k].name;
        ft.instance = inst.name;
        ft.detail = ev.detail;
        ft.kernel_suspect = ev.kernel_suspect;
        ft.instance_text = serialized;
        report.failures.push_back(std::move(ft));
      }
    }
  }

  for (std::size_t k = 0; k < selected.size(); ++k)
    std::fprintf(stderr, "suite timing: %-24s %8.1f ms\n", selected[k].name,
                 1000.0 * check_seconds[k]);
  return report;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "lemma suite report\n";
  out << "instances: " << instance_count << "\n";
  if (bound > 0)
    out << "bound: " << bound << "\n";
  else
    out << "bound: ring default 2(n+1)\n";
  out << "\n";
  for (const CheckTally& t : tallies) {
    out << t.check << ": holds " << t.holds << ", fails " << t.fails
        << ", inconclusive " << t.inconclusive << ", skipped " << t.skipped
        << "\n";
  }
  if (!failures.empty()) {
    out << "\nfailures:\n";
    for (const FailingTranscript& f : failures) {
      out << "- " << f.check << " on " << f.instance
          << (f.kernel_suspect ? " [kernel suspect]" : "") << ": " << f.detail
          << "\n";
      std::istringstream lines(f.instance_text);
      std::string line;
      while (std::getline(lines, line)) out << "    " << line << "\n";
    }
  }
  return out.str();
}

std::string SuiteReport::to_machine() const {
  nlohmann::json doc;
  doc["kind"] = "lemma-suite-report";
  doc["instance_count"] = instance_count;
  doc["bound"] = bound;  // 0: per-ring default
  doc["instances"] = instances;
  nlohmann::json checks_json = nlohmann::json::array();
  for (const CheckTally& t : tallies) {
    nlohmann::json row;
    row["name"] = t.check;
    row["holds"] = t.holds;
    row["fails"] = t.fails;
    row["inconclusive"] = t.inconclusive;
    row["skipped"] = t.skipped;
    checks_json.push_back(std::move(row));
  }
  doc["checks"] = std::move(checks_json);
  nlohmann::json fail_json = nlohmann::json::array();
  for (const FailingTranscript& f : failures) {
    nlohmann::json row;
    row["check"] = f.check;
    row["instance"] = f.instance;
    row["detail"] = f.detail;
    row["kernel_suspect"] = f.kernel_suspect;
    row["instance_text"] = f.instance_text;
    fail_json.push_back(std::move(row));
  }
  doc["failures"] = std::move(fail_json);
  return doc.dump(2) + "\n";
}

}  // namespace depthlab

#include "depthlab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "depthlab/depth_formula.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/fpmodule.hpp"
#include "depthlab/homology.hpp"
#include "depthlab/instance_file.hpp"
#include "depthlab/instances.hpp"
#include "depthlab/poly_text.hpp"
#include "depthlab/resolution.hpp"
#include "depthlab/suite.hpp"

namespace depthlab {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Option plumbing. Precedence: explicit flag > file options block > default.

struct Flags {
  std::optional<std::string> file;
  std::optional<int> bound;
  std::optional<int> dmax;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  std::optional<int> length;          // resolve only
  std::optional<std::string> checks;  // suite only
  std::string format = "text";
};

struct Resolved {
  // Unset only for `suite` runs that use each family ring's own default.
  std::optional<int> bound;
  int dmax = 12;
  std::uint64_t seed = 0;
  int max_degree = 3;
};

Resolved resolve_options(const Flags& fl, const InstanceFile* file,
                         const Ring* ring) {
  Resolved r;
  const FileOptions* fo = file ? &file->options : nullptr;
  if (fl.bound)
    r.bound = *fl.bound;
  else if (fo && fo->bound)
    r.bound = *fo->bound;
  else if (ring)
    r.bound = default_tor_bound(ring->nvars());
  if (fl.dmax)
    r.dmax = *fl.dmax;
  else if (fo && fo->d_max)
    r.dmax = *fo->d_max;
  if (fl.seed)
    r.seed = *fl.seed;
  else if (fo && fo->seed)
    r.seed = *fo->seed;
  if (fl.max_degree)
    r.max_degree = *fl.max_degree;
  else if (fo && fo->max_degree)
    r.max_degree = *fo->max_degree;
  return r;
}

// ---------------------------------------------------------------------------
// Report building blocks.

struct Env {
  std::vector<std::string> echo;  // original argument vector
  Resolved opt;
  bool machine = false;
  std::optional<int> length;  // resolved resolution length (resolve only)
  std::ostringstream out;

  // Skeleton of the single machine-readable document: command echo, kind
  // tag, and the option values after defaulting.
  json doc(const char* kind) const {
    json j;
    j["command"] = echo;
    j["kind"] = kind;
    json o;
    o["bound"] = opt.bound ? json(*opt.bound) : json(nullptr);
    o["dmax"] = opt.dmax;
    o["seed"] = opt.seed;
    o["max_degree"] = opt.max_degree;
    o["format"] = machine ? "machine" : "text";
    if (length) o["length"] = *length;
    j["options"] = o;
    return j;
  }
};

json ring_json(const Ring& ring) {
  json j;
  j["char"] = ring.field().characteristic();
  j["vars"] = ring.var_names();
  json rels = json::array();
  for (const Poly& p : ring.relations())
    rels.push_back(poly_to_string(p, ring.var_names()));
  j["relations"] = rels;
  return j;
}

std::string ring_text(const Ring& ring) {
  std::ostringstream os;
  os << "char " << ring.field().characteristic() << ", vars ";
  const auto& names = ring.var_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ",";
    os << names[i];
  }
  if (!ring.relations().empty()) {
    os << ", modulo (";
    for (std::size_t i = 0; i < ring.relations().size(); ++i) {
      if (i) os << ", ";
      os << poly_to_string(ring.relations()[i], names);
    }
    os << ")";
  }
  return os.str();
}

// Hilbert values of m as [degree, value] pairs with value != 0, from the
// least generator twist through dmax.
json hilbert_json(const FPModule& m, int dmax) {
  json a = json::array();
  if (m.is_zero()) return a;
  for (int d = m.min_twist(); d <= dmax; ++d) {
    const int v = m.hilbert_value(d);
    if (v != 0) a.push_back(json::array({d, v}));
  }
  return a;
}

std::string hilbert_text(const FPModule& m, int dmax) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  os << "hilbert {";
  bool first = true;
  for (int d = m.min_twist(); d <= dmax; ++d) {
    const int v = m.hilbert_value(d);
    if (v == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << d << ": " << v;
  }
  os << "}";
  return os.str();
}

// One Betti row: [twist, multiplicity] pairs, twist ascending.
json betti_row(const FreeModule& f) {
  std::map<int, int> counts;
  for (int t : f.twists) ++counts[t];
  json row = json::array();
  for (const auto& [t, c] : counts) row.push_back(json::array({t, c}));
  return row;
}

std::string betti_row_text(const FreeModule& f) {
  if (f.rank() == 0) return "0";
  std::map<int, int> counts;
  for (int t : f.twists) ++counts[t];
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : counts) {
    if (!first) os << " + ";
    first = false;
    os << c << "*R(" << -t << ")";
  }
  return os.str();
}

json verdict_json(const TorVerdict& v, int dmax) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  j["fail_index"] = v.fail_index ? json(*v.fail_index) : json(nullptr);
  j["checked_bound"] = v.checked_bound ? json(*v.checked_bound) : json(nullptr);
  j["witness_hilbert"] =
      v.witness ? hilbert_json(*v.witness, dmax) : json(nullptr);
  return j;
}

std::string verdict_text(const TorVerdict& v, int bound, int dmax) {
  std::ostringstream os;
  os << "tor-independence up to bound " << bound << ": "
     << outcome_name(v.outcome);
  if (v.outcome == Outcome::Fails && v.fail_index) {
    os << " (first nonvanishing Tor at i = " << *v.fail_index;
    if (v.witness) os << ", witness " << hilbert_text(*v.witness, dmax);
    os << ")";
  }
  if (v.outcome == Outcome::Inconclusive && v.checked_bound)
    os << " (vanishing checked through i = " << *v.checked_bound << ")";
  return os.str();
}

InstanceFile load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_file(ss.str());
}

const FPModule& need_module(const InstanceFile& f, const std::string& name) {
  const FPModule* m = f.find_module(name);
  if (!m) throw NameError("no module named '" + name + "' in the instance file");
  return *m;
}

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return kExitHolds;
    case Outcome::Fails:
      return kExitFails;
    case Outcome::Inconclusive:
      return kExitInconclusive;
  }
  return kExitInternal;
}

// ---------------------------------------------------------------------------
// Commands.

int cmd_depth(Env& env, const InstanceFile& file, const std::string& name) {
  const FPModule& m = need_module(file, name);
  const int d = m.depth();
  if (env.machine) {
    json j = env.doc("depth");
    j["ring"] = ring_json(*m.ring());
    j["module"] = name;
    j["depth"] = d;
    env.out << j.dump(2) << "\n";
  } else {
    env.out << "depth " << name << " = " << d << "\n";
  }
  return kExitHolds;
}

int cmd_tor(Env& env, const InstanceFile& file, const std::string& a,
            const std::string& b) {
  const FPModule& M = need_module(file, a);
  const FPModule& N = need_module(file, b);
  const int bound = *env.opt.bound;
  const TorVerdict v = is_tor_independent(M, N, bound);
  if (env.machine) {
    json j = env.doc("tor");
    j["ring"] = ring_json(*M.ring());
    j["modules"] = json::array({a, b});
    json rows = json::array();
    for (int i = 0; i <= bound; ++i) {
      const FPModule t = tor(M, N, i);
      json row;
      row["i"] = i;
      row["zero"] = t.is_zero();
      row["hilbert"] = hilbert_json(t, env.opt.dmax);
      rows.push_back(row);
    }
    j["tor"] = rows;
    j["verdict"] = verdict_json(v, env.opt.dmax);
    env.out << j.dump(2) << "\n";
  } else {
    for (int i = 0; i <= bound; ++i) {
      const FPModule t = tor(M, N, i);
      env.out << "Tor_" << i << "(" << a << ", " << b
              << ") = " << hilbert_text(t, env.opt.dmax) << "\n";
    }
    env.out << verdict_text(v, bound, env.opt.dmax) << "\n";
  }
  return outcome_exit(v.outcome);
}

int cmd_resolve(Env& env, const InstanceFile& file, const std::string& name) {
  const FPModule& m = need_module(file, name);
  const int length = *env.length;
  auto res = m.resolution(length);
  const ResolutionCertificate cert = verify_resolution(*res, m);
  const bool complete = res->complete();
  const int pd = complete ? res->proj_dim() : -1;
  const int last = complete ? std::max(pd, 0) : res->nmaps();
  if (env.machine) {
    json j = env.doc("resolution");
    j["ring"] = ring_json(*m.ring());
    j["module"] = name;
    j["complete"] = complete;
    j["proj_dim"] = (complete && pd >= 0) ? json(pd) : json(nullptr);
    json betti = json::array();
    json ranks = json::array();
    for (int i = 0; i <= last; ++i) {
      betti.push_back(betti_row(res->free_at(i)));
      ranks.push_back(res->free_at(i).rank());
    }
    j["betti"] = betti;
    j["ranks"] = ranks;
    json c;
    c["composites_zero"] = cert.composites_zero;
    c["entries_in_maximal_ideal"] = cert.entries_in_maximal_ideal;
    c["exact"] = cert.exact;
    c["presents_module"] = cert.presents_module;
    c["ok"] = cert.ok();
    j["certificate"] = c;
    env.out << j.dump(2) << "\n";
  } else {
    env.out << "minimal free resolution of " << name;
    if (complete)
      env.out << " (complete, proj dim " << pd << ")";
    else
      env.out << " (truncated at length " << res->nmaps() << ")";
    env.out << ":\n";
    for (int i = 0; i <= last; ++i)
      env.out << "  " << i << ": " << betti_row_text(res->free_at(i)) << "\n";
    env.out << "certificate: " << (cert.ok() ? "ok" : "FAILED") << "\n";
  }
  return cert.ok() ? kExitHolds : kExitInternal;
}

int cmd_tensor(Env& env, const InstanceFile& file, const std::string& a,
               const std::string& b) {
  const FPModule& M = need_module(file, a);
  const FPModule& N = need_module(file, b);
  const FPModule T = tensor_product(M, N).minimal();
  const bool zero = T.is_zero();
  const int d = zero ? -1 : T.depth();
  if (env.machine) {
    json j = env.doc("tensor");
    j["ring"] = ring_json(*M.ring());
    j["modules"] = json::array({a, b});
    j["zero"] = zero;
    j["twists"] = json(T.cover().twists);
    j["relation_count"] = T.relations().size();
    j["depth"] = zero ? json(nullptr) : json(d);
    j["hilbert"] = hilbert_json(T, env.opt.dmax);
    env.out << j.dump(2) << "\n";
  } else {
    if (zero) {
      env.out << a << " (x) " << b << " = 0\n";
    } else {
      env.out << a << " (x) " << b << ": cover " << betti_row_text(T.cover())
              << ", " << T.relations().size() << " relation(s)\n";
      env.out << "depth = " << d << "\n";
      env.out << hilbert_text(T, env.opt.dmax) << "\n";
    }
  }
  return kExitHolds;
}

int cmd_check_formula(Env& env, const InstanceFile& file, const std::string& a,
                      const std::string& b) {
  const FPModule& M = need_module(file, a);
  const FPModule& N = need_module(file, b);
  const int bound = *env.opt.bound;
  const DefectRecord rec = depth_formula_defect(M, N, bound);
  const Outcome oc = rec.tor_verdict.outcome;
  std::string formula;
  int code = kExitHolds;
  if (oc == Outcome::Holds) {
    formula = rec.defect == 0 ? "holds" : "fails";
    code = rec.defect == 0 ? kExitHolds : kExitFails;
  } else if (oc == Outcome::Fails) {
    formula = "not-applicable";
    code = kExitFails;
  } else {
    formula = "inconclusive";
    code = kExitInconclusive;
  }
  if (env.machine) {
    json j = env.doc("depth-formula");
    j["ring"] = ring_json(*M.ring());
    j["modules"] = json::array({a, b});
    json d;
    d["M"] = rec.depth_m;
    d["N"] = rec.depth_n;
    d["ring"] = rec.depth_r;
    d["tensor"] = rec.depth_tensor;
    j["depths"] = d;
    j["defect"] = rec.defect;
    j["applicable"] = rec.applicable();
    j["formula"] = formula;
    j["verdict"] = verdict_json(rec.tor_verdict, env.opt.dmax);
    env.out << j.dump(2) << "\n";
  } else {
    env.out << "depth " << a << " = " << rec.depth_m << "\n";
    env.out << "depth " << b << " = " << rec.depth_n << "\n";
    env.out << "depth ring = " << rec.depth_r << "\n";
    env.out << "depth " << a << " (x) " << b << " = " << rec.depth_tensor
            << "\n";
    env.out << "defect = " << rec.defect << "\n";
    env.out << verdict_text(rec.tor_verdict, bound, env.opt.dmax) << "\n";
    env.out << "depth formula: ";
    if (oc == Outcome::Holds) {
      env.out << formula << "\n";
    } else if (oc == Outcome::Fails) {
      env.out << "not applicable (the pair is not Tor-independent)\n";
    } else {
      env.out << "inconclusive (Tor-independence undecided within the bound)\n";
    }
  }
  return code;
}

int cmd_reduce(Env& env, const InstanceFile& file, const std::string& a,
               const std::string& b) {
  const FPModule& M = need_module(file, a);
  const FPModule& N = need_module(file, b);
  const int bound = *env.opt.bound;
  try {
    const ReductionStep step =
        reduce_pair(M, N, env.opt.seed, bound, env.opt.max_degree);
    const auto& vars = step.ring_before->var_names();
    if (env.machine) {
      json j = env.doc("reduction");
      j["ring"] = ring_json(*step.ring_before);
      j["modules"] = json::array({a, b});
      j["outcome"] = "holds";
      j["element"] = poly_to_string(step.element, vars);
      j["certified"] = step.certified;
      j["ring_after"] = ring_json(*step.ring_after);
      json before, after;
      for (const auto& [k, mod] : step.modules_before) before[k] = mod.depth();
      for (const auto& [k, mod] : step.modules_after)
        after[k] = mod.is_zero() ? json(nullptr) : json(mod.depth());
      j["depths_before"] = before;
      j["depths_after"] = after;
      env.out << j.dump(2) << "\n";
    } else {
      env.out << "reduction by " << poly_to_string(step.element, vars)
              << ", regular on {";
      for (std::size_t i = 0; i < step.certified.size(); ++i) {
        if (i) env.out << ", ";
        env.out << step.certified[i];
      }
      env.out << "}:\n";
      env.out << "  ring before: " << ring_text(*step.ring_before) << "\n";
      env.out << "  ring after:  " << ring_text(*step.ring_after) << "\n";
      for (const std::string& k : step.certified) {
        env.out << "  depth " << k << ": "
                << step.modules_before.at(k).depth() << " -> ";
        const FPModule& after = step.modules_after.at(k);
        if (after.is_zero())
          env.out << "0 (module vanished)\n";
        else
          env.out << after.depth() << "\n";
      }
    }
    return kExitHolds;
  } catch (const PreconditionError& e) {
    if (env.machine) {
      json j = env.doc("reduction");
      j["modules"] = json::array({a, b});
      j["outcome"] = "fails";
      j["reason"] = e.what();
      j["failing_depth"] =
          e.failing_depth >= 0 ? json(e.failing_depth) : json(nullptr);
      env.out << j.dump(2) << "\n";
    } else {
      env.out << "reduction hypotheses fail: " << e.what() << "\n";
    }
    return kExitFails;
  } catch (const SearchExhausted& e) {
    if (env.machine) {
      json j = env.doc("reduction");
      j["modules"] = json::array({a, b});
      j["outcome"] = "inconclusive";
      j["reason"] = e.what();
      env.out << j.dump(2) << "\n";
    } else {
      env.out << "no regular element found: " << e.what() << "\n";
    }
    return kExitInconclusive;
  }
}

int cmd_suite(Env& env, const std::optional<InstanceFile>& file,
              const std::optional<std::string>& checks_flag) {
  std::vector<InstanceFamily> fams;
  if (file) {
    if (file->families.empty())
      throw InputError("the instance file defines no family blocks for the suite");
    fams = file->families;
  } else {
    fams = default_families();
  }
  std::vector<std::string> checks;
  if (checks_flag) {
    std::string cur;
    for (char ch : *checks_flag + std::string(",")) {
      if (ch == ',') {
        if (!cur.empty()) checks.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
  }
  const int bound = env.opt.bound ? *env.opt.bound : 0;
  const SuiteReport rep = run_lemma_suite(fams, checks, bound);
  if (env.machine) {
    json j = env.doc("suite");
    j["report"] = json::parse(rep.to_machine());
    env.out << j.dump(2) << "\n";
  } else {
    env.out << rep.to_text();
  }
  long fails = 0;
  long inconclusive = 0;
  for (const CheckTally& t : rep.tallies) {
    fails += t.fails;
    inconclusive += t.inconclusive;
  }
  if (fails > 0) return kExitFails;
  if (inconclusive > 0) return kExitInconclusive;
  return kExitHolds;
}

}  // namespace

// ---------------------------------------------------------------------------
// Driver.

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  Env env;
  env.echo = args;

  Flags fl;
  std::string name_a;
  std::string name_b;

  CLI::App app{"depth laboratory for finitely generated graded modules",
               "depthlab"};
  app.require_subcommand(1);

  const auto add_common = [&fl](CLI::App* sub) {
    sub->add_option("--file", fl.file, "instance file path");
    sub->add_option("--bound", fl.bound,
                    "Tor/resolution truncation (default: file options, else "
                    "2*(nvars+1))")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--dmax", fl.dmax, "Hilbert cutoff degree (default 12)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", fl.seed, "random seed (default 0)");
    sub->add_option("--max-degree", fl.max_degree,
                    "regular-element search degree cap (default 3)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", fl.format, "report format (default text)")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  CLI::App* c_depth = app.add_subcommand("depth", "depth of a named module");
  c_depth->add_option("module", name_a, "module name")->required();
  add_common(c_depth);

  CLI::App* c_tor = app.add_subcommand(
      "tor", "graded Tor modules of a pair and the vanishing verdict");
  c_tor->add_option("first", name_a, "first module name")->required();
  c_tor->add_option("second", name_b, "second module name")->required();
  add_common(c_tor);

  CLI::App* c_resolve =
      app.add_subcommand("resolve", "minimal free resolution with certificate");
  c_resolve->add_option("module", name_a, "module name")->required();
  c_resolve
      ->add_option("--length", fl.length,
                   "number of resolution maps to compute (default: bound)")
      ->check(CLI::NonNegativeNumber);
  add_common(c_resolve);

  CLI::App* c_tensor = app.add_subcommand(
      "tensor", "tensor product presentation, Hilbert values and depth");
  c_tensor->add_option("first", name_a, "first module name")->required();
  c_tensor->add_option("second", name_b, "second module name")->required();
  add_common(c_tensor);

  CLI::App* c_check = app.add_subcommand(
      "check-formula", "depth formula defect and Tor-independence verdict");
  c_check->add_option("first", name_a, "first module name")->required();
  c_check->add_option("second", name_b, "second module name")->required();
  add_common(c_check);

  CLI::App* c_reduce = app.add_subcommand(
      "reduce", "one certified regular-element reduction of a pair");
  c_reduce->add_option("first", name_a, "first module name")->required();
  c_reduce->add_option("second", name_b, "second module name")->required();
  add_common(c_reduce);

  CLI::App* c_suite =
      app.add_subcommand("suite", "run lemma checks over instance families");
  c_suite->add_option("--checks", fl.checks,
                      "comma-separated check names (default: all)");
  add_common(c_suite);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    std::optional<InstanceFile> file;
    if (fl.file) file = load_file(*fl.file);

    env.machine = fl.format == "machine";
    if (cmd == "suite") {
      env.opt = resolve_options(fl, file ? &*file : nullptr, nullptr);
      result.exit_code = cmd_suite(env, file, fl.checks);
    } else {
      if (!file) throw InputError("an instance file is required (--file PATH)");
      env.opt = resolve_options(fl, &*file, file->ring.get());
      if (cmd == "resolve") env.length = fl.length ? *fl.length : *env.opt.bound;
      if (cmd == "depth")
        result.exit_code = cmd_depth(env, *file, name_a);
      else if (cmd == "tor")
        result.exit_code = cmd_tor(env, *file, name_a, name_b);
      else if (cmd == "resolve")
        result.exit_code = cmd_resolve(env, *file, name_a);
      else if (cmd == "tensor")
        result.exit_code = cmd_tensor(env, *file, name_a, name_b);
      else if (cmd == "check-formula")
        result.exit_code = cmd_check_formula(env, *file, name_a, name_b);
      else if (cmd == "reduce")
        result.exit_code = cmd_reduce(env, *file, name_a, name_b);
    }
    result.out = env.out.str();
    return result;
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    result.out = subs.empty() ? app.help() : subs.front()->help();
    result.exit_code = kExitHolds;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
    return result;
  } catch (const InternalError& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = kExitInternal;
    return result;
  } catch (const SearchExhausted& e) {
    result.err = std::string("search exhausted: ") + e.what() + "\n";
    result.exit_code = kExitInconclusive;
    return result;
  } catch (const BoundError& e) {
    result.err = std::string("bound exceeded: ") + e.what() + "\n";
    result.exit_code = kExitInconclusive;
    return result;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("unexpected error: ") + e.what() + "\n";
    result.exit_code = kExitInternal;
    return result;
  }
}

}  // namespace depthlab

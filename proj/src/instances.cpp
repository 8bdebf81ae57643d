#include "depthlab/instances.hpp"

#include <random>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

// Random homogeneous element of R of the given degree, expressed in the
// standard-monomial basis.
Poly random_form(const Ring& ring, int degree, std::mt19937_64& rng) {
  const PrimeField& F = ring.field();
  const std::uint64_t p = F.characteristic();
  std::vector<Term> terms;
  for (const Monomial& mon : ring.standard_monomials(degree)) {
    auto c = static_cast<PrimeField::Elem>(rng() % p);
    if (c != 0) terms.push_back(Term{c, mon});
  }
  return Poly::collect(F, std::move(terms));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = base + 0x9E3779B97F4A7C15ULL * (a + 1) +
                    0xBF58476D1CE4E5B9ULL * (b + 1);
  h ^= h >> 31;
  return h;
}

// One family member: the presentation shape is drawn from the seed (square
// generic presentations have free syzygies, so mixing shapes is what makes
// the population interesting), and half the members are replaced by their
// first syzygy to reach positive depth.
FPModule family_module(const InstanceFamily& fam, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto draw = [&rng](int n) {
    return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n)));
  };
  const int gens = draw(fam.gens);
  const int rels = draw(fam.rels + gens - 1);
  FPModule m = gen_random_module(fam.ring, gens, rels, fam.max_deg, rng());
  if (fam.positive_depth && rng() % 2 == 0) {
    FPModule w = syzygy_module(m, 1);
    if (!w.is_zero()) return w;
  }
  return m;
}

}  // namespace

FPModule gen_random_module(const RingPtr& ring, int gens, int rels,
                           int max_deg, std::uint64_t seed) {
  if (gens < 1) throw InputError("gen_random_module needs at least one generator");
  if (rels < 0) throw InputError("gen_random_module needs a nonnegative relation count");
  if (max_deg < 1) throw InputError("gen_random_module needs max_deg >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<int> twists(static_cast<std::size_t>(gens), 0);
    if (max_deg >= 2) {
      for (int& t : twists) t = static_cast<int>(rng() % 2);
    }
    int tmin = twists[0], tmax = twists[0];
    for (int t : twists) {
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
    }
    FreeModule cover(twists);
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(rels));
    for (int j = 0; j < rels; ++j) {
      // Column degree chosen so every entry has degree in [1, max_deg].
      const int lo = tmax + 1;
      const int hi = tmin + max_deg;
      const int cdeg = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                hi - lo + 1));
      Vec row;
      row.reserve(static_cast<std::size_t>(gens));
      for (int i = 0; i < gens; ++i)
        row.push_back(random_form(*ring, cdeg - twists[static_cast<std::size_t>(i)], rng));
      rows.push_back(std::move(row));
    }
    FPModule m(ring, cover, std::move(rows));
    const FPModule& mm = m.minimal();
    if (!mm.is_zero()) return mm;
  }
  throw GenerationError("random presentation kept collapsing to the zero module");
}

FPModule quadric_mf_module(const RingPtr& r) {
  FreeModule target({0, 0, 0, 0});
  FreeModule source({1, 1, 1, 1});
  std::vector<Vec> cols = {
      Vec{r->parse("x"), r->parse("y"), r->parse("z"), r->parse("0")},
      Vec{r->parse("-y"), r->parse("x"), r->parse("0"), r->parse("z")},
      Vec{r->parse("z"), r->parse("0"), r->parse("-x"), r->parse("y")},
      Vec{r->parse("0"), r->parse("z"), r->parse("-y"), r->parse("-x")}};
  return cokernel(make_map(r, target, source, std::move(cols)));
}

std::vector<Instance> known_examples() {
  std::vector<Instance> out;
  {
    auto s = Ring::polynomial_ring(32003, {"x", "y"});
    Instance k1{"K1",
                s,
                FPModule(s, FreeModule({0}), {Vec{s->parse("x")}}),
                FPModule(s, FreeModule({0}), {Vec{s->parse("y")}}),
                1,
                1,
                2,
                0,
                0,
                Outcome::Holds};
    out.push_back(std::move(k1));
  }
  {
    auto r = Ring::quotient_ring(32003, {"x", "y"},
                                 {Ring::polynomial_ring(32003, {"x", "y"})
                                      ->parse("x*y")});
    FPModule m(r, FreeModule({0}), {Vec{r->parse("x")}});
    Instance k2{"K2", r, m, m, 1, 1, 1, 1, 0, Outcome::Fails};
    out.push_back(std::move(k2));
  }
  {
    auto s3 = Ring::polynomial_ring(32003, {"x", "y", "z"});
    auto r = Ring::quotient_ring(32003, {"x", "y", "z"},
                                 {s3->parse("x^2+y^2+z^2")});
    Instance k3{"K3",
                r,
                quadric_mf_module(r),
                FPModule(r, FreeModule({0}), {Vec{r->parse("z")}}),
                2,
                1,
                2,
                1,
                0,
                Outcome::Holds};
    out.push_back(std::move(k3));
  }
  return out;
}

std::vector<InstanceFamily> default_families() {
  std::vector<InstanceFamily> fams;
  auto add = [&fams](std::string name, RingPtr ring, int count,
                     std::uint64_t seed) {
    InstanceFamily f;
    f.name = std::move(name);
    f.ring = std::move(ring);
    f.count = count;
    f.seed = seed;
    fams.push_back(std::move(f));
  };
  auto s2 = Ring::polynomial_ring(32003, {"x", "y"});
  auto s3 = Ring::polynomial_ring(32003, {"x", "y", "z"});
  auto s4 = Ring::polynomial_ring(32003, {"x", "y", "z", "w"});
  add("reg2", s2, 60, 101);
  add("reg3", s3, 40, 202);
  add("hyp2", Ring::quotient_ring(32003, {"x", "y"}, {s2->parse("x*y")}), 40,
      303);
  add("hyp3",
      Ring::quotient_ring(32003, {"x", "y", "z"}, {s3->parse("x^2+y^2+z^2")}),
      25, 404);
  add("ci3",
      Ring::quotient_ring(32003, {"x", "y", "z"},
                          {s3->parse("x^2"), s3->parse("y^2")}),
      25, 505);
  add("ci4",
      Ring::quotient_ring(32003, {"x", "y", "z", "w"},
                          {s4->parse("x*y"), s4->parse("z*w")}),
      15, 606);
  return fams;
}

std::vector<Instance> build_family(const InstanceFamily& fam) {
  if (fam.use_known_examples) return known_examples();
  if (!fam.ring) throw InputError("instance family has no ring");
  if (fam.count < 0) throw InputError("instance family has a negative count");
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(fam.count));
  for (int i = 0; i < fam.count; ++i) {
    FPModule m = family_module(fam, mix_seed(fam.seed, static_cast<std::uint64_t>(i), 0));
    FPModule n = family_module(fam, mix_seed(fam.seed, static_cast<std::uint64_t>(i), 1));
    Instance inst{fam.name + "[" + std::to_string(i) + "]",
                  fam.ring,
                  std::move(m),
                  std::move(n),
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt};
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace depthlab

#include <ucz/suites.hpp>

#include <ucz/generators.hpp>
#include <ucz/invariants.hpp>
#include <ucz/kostant.hpp>
#include <ucz/logsympl.hpp>
#include <ucz/wonderful.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace ucz {

int SuiteResult::passed() const {
  return std::accumulate(details.begin(), details.end(), 0,
                         [](int s, const CheckDetail& d) { return s + d.passed; });
}

int SuiteResult::total() const {
  return std::accumulate(details.begin(), details.end(), 0,
                         [](int s, const CheckDetail& d) { return s + d.total; });
}

const CheckDetail* SuiteResult::find(const std::string& check) const {
  for (const auto& d : details)
    if (d.check == check) return &d;
  return nullptr;
}

bool Report::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed() == s.total(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kostant", "moment", "wonderful", "logsympl",
                                                 "reduction"};
  return names;
}

std::optional<std::vector<std::string>> expand_suite(const std::string& selector) {
  if (selector == "all") return suite_names();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), selector) == names.end()) return std::nullopt;
  return std::vector<std::string>{selector};
}

namespace {

std::string fmt(const Vec& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v(i).str();
  return out + "]";
}

std::string fmt(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Accumulates one sampled check.
class Tally {
 public:
  Tally(std::string check, std::string inputs) {
    d_.check = std::move(check);
    d_.inputs = std::move(inputs);
  }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++d_.total;
    if (ok) {
      ++d_.passed;
    } else if (!d_.failure) {
      d_.failure = describe();
    }
  }

  CheckDetail finish() {
    d_.expected = std::to_string(d_.total) + "/" + std::to_string(d_.total);
    d_.got = std::to_string(d_.passed) + "/" + std::to_string(d_.total);
    return d_;
  }

 private:
  CheckDetail d_;
};

CheckDetail exact(std::string check, std::string inputs, std::string expected, std::string got) {
  CheckDetail d;
  d.check = std::move(check);
  d.inputs = std::move(inputs);
  d.total = 1;
  d.passed = expected == got ? 1 : 0;
  d.expected = std::move(expected);
  d.got = std::move(got);
  return d;
}

CheckDetail not_applicable(std::string check) {
  CheckDetail d;
  d.check = std::move(check);
  d.inputs = "requires the type A matrix realization";
  d.expected = "n/a";
  d.got = "n/a";
  return d;
}

std::string samples_text(int k) { return std::to_string(k) + " seeded samples"; }

// FNV-1a, to give each suite its own stream.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return seed ^ h;
}

// Invariant degrees d_i = exponent + 1.
std::vector<int> expected_degrees(const RootSystem& rs) {
  const int l = rs.rank;
  std::vector<int> d;
  switch (rs.family) {
    case Family::A:
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// a · b, skipping the zero entries of a (bivectors have one entry per row).
Mat sparse_product(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0) out.row(i) += a(i, k) * b.row(k);
  return out;
}

Vec random_f_plus_b(Sampler& rng, const LieAlgebra& L, const KostantSlice& S) {
  return Vec(S.triple().f + random_in(rng, L.borel()));
}

RootSubset random_subset(Sampler& rng, const LieAlgebra& L) {
  return static_cast<RootSubset>(rng.uniform_int(0, full_subset(L.rank())));
}

// Σ over proper I of |W / W_I| for W = S_{l+1}.
std::size_t expected_fixed_points(int rank) {
  auto factorial = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  std::size_t total = 0;
  for (RootSubset I = 0; I < full_subset(rank); ++I) {
    std::size_t wi = 1;
    int block = 1;
    for (int i = 0; i < rank; ++i) {
      if (I & (1u << i)) {
        ++block;
      } else {
        wi *= factorial(block);
        block = 1;
      }
    }
    wi *= factorial(block);
    total += factorial(rank + 1) / wi;
  }
  return total;
}

// ---------------------------------------------------------------------------

void kostant_suite(const LieAlgebra& L, Sampler& rng, int samples, SuiteResult& out) {
  const PrincipalTriple t = build_principal_triple(L);
  const KostantSlice S = build_slice(L, t);
  const int l = L.rank();

  Tally sl2("sl2 relations", "[e,f] = h, [h,e] = 2e, [h,f] = -2f");
  sl2.record(L.bracket(t.e, t.f) == t.h, [] { return "[e,f] != h"; });
  sl2.record(L.bracket(t.h, t.e) == Vec(2 * t.e), [] { return "[h,e] != 2e"; });
  sl2.record(L.bracket(t.h, t.f) == Vec(-2 * t.f), [] { return "[h,f] != -2f"; });
  out.details.push_back(sl2.finish());

  Tally regular("regular triple", "e, h, f regular and ad(h) evenly graded");
  regular.record(is_regular(L, t.e), [] { return "e not regular"; });
  regular.record(is_regular(L, t.h), [] { return "h not regular"; });
  regular.record(is_regular(L, t.f), [] { return "f not regular"; });
  regular.record(S.grading().all_even(), [] { return "odd ad(h) degree"; });
  out.details.push_back(regular.finish());

  out.details.push_back(exact("centralizer dimension", "dim of the centralizer of e",
                              std::to_string(l), std::to_string(S.centralizer_e().dim())));
  out.details.push_back(exact("slice degrees", "exponents + 1", fmt(expected_degrees(L.roots())),
                              fmt(S.degrees())));
  Index strings = 0;
  for (int d : S.degrees()) strings += 2 * d - 1;
  out.details.push_back(
      exact("sl2 string dimensions", "sum of 2d - 1", std::to_string(L.dim()), std::to_string(strings)));

  const int bound = S.grading().max_degree() / 2 + 1;
  Tally terminates("normalization terminates", samples_text(samples) + " in f + b, at most " +
                                                   std::to_string(bound) + " sweeps");
  Tally on_slice("normalization lands on the slice", samples_text(samples));
  Tally witness("witness reproduces the normal form", samples_text(samples));
  Tally idempotent("normalization idempotent", samples_text(samples));
  Tally order("normalization order independent", samples_text(samples));
  Tally orbit("normalization constant on N-orbits", samples_text(samples));
  Tally invariants("normalization preserves invariants", samples_text(samples));
  for (int k = 0; k < samples; ++k) {
    const Vec xi = random_f_plus_b(rng, L, S);
    const auto describe = [&] { return "xi = " + fmt(xi); };
    const Normalization n = slice_normalize(L, S, xi);
    terminates.record(n.sweeps <= bound && n.sweeps <= S.grading().max_degree(), describe);
    on_slice.record(S.contains(n.normal_form), describe);
    witness.record(witness_action(L, n.witness) * xi == n.normal_form, describe);
    idempotent.record(slice_normalize(L, S, n.normal_form).normal_form == n.normal_form, describe);
    order.record(slice_normalize(L, S, xi, BasisOrder::Reversed).normal_form == n.normal_form,
                 describe);
    const Vec moved = exp_ad(L, random_in(rng, L.nilradical(), 2, 2)) * xi;
    orbit.record(slice_normalize(L, S, moved).normal_form == n.normal_form, describe);
    if (L.has_matrix_realization())
      invariants.record(invariants_eval(L, xi) == invariants_eval(L, n.normal_form), describe);
  }
  for (Tally* tally : {&terminates, &on_slice, &witness, &idempotent, &order, &orbit})
    out.details.push_back(tally->finish());
  out.details.push_back(L.has_matrix_realization() ? invariants.finish()
                                                   : not_applicable("normalization preserves invariants"));

  if (L.label() == "A1") {
    Tally closed("sl2 closed form", samples_text(samples) + ": f + a h + b e -> f + (a^2 + b) e");
    for (int k = 0; k < samples; ++k) {
      const Rat a = rng.rational(), b = rng.rational();
      const Normalization n = slice_normalize(L, S, Vec(t.f + a * t.h + b * t.e));
      closed.record(n.normal_form == Vec(t.f + (a * a + b) * t.e),
                    [&] { return "a = " + a.str() + ", b = " + b.str(); });
    }
    out.details.push_back(closed.finish());
  }

  if (!L.has_matrix_realization()) {
    out.details.push_back(not_applicable("slice roundtrip"));
    out.details.push_back(not_applicable("slice converse roundtrip"));
    return;
  }
  Tally section("slice roundtrip", samples_text(samples) + ": invariants of slice_from_invariants(c) = c");
  Tally converse("slice converse roundtrip", samples_text(samples) + ": slice_from_invariants(invariants(x)) = x on S");
  for (int k = 0; k < samples; ++k) {
    const Vec c = rng.vector(l);
    section.record(invariants_eval(L, slice_from_invariants(L, S, c)) == c,
                   [&] { return "c = " + fmt(c); });
    const Vec x = S.point(rng.vector(l));
    converse.record(slice_from_invariants(L, S, invariants_eval(L, x)) == x,
                    [&] { return "x = " + fmt(x); });
  }
  out.details.push_back(section.finish());
  out.details.push_back(converse.finish());
}

void moment_suite(const LieAlgebra& L, Sampler& rng, int samples, SuiteResult& out) {
  const char* const names[] = {"invariants ignore the nilradical", "forward inclusion",
                               "split pair converse", "fiber product under conjugation",
                               "jacobian rank at regular pairs", "jacobian rank at zero"};
  if (!L.has_matrix_realization()) {
    for (const char* n : names) out.details.push_back(not_applicable(n));
    return;
  }
  const Index m = L.realization_size();
  const KostantSlice S = build_slice(L, build_principal_triple(L));
  std::vector<ParabolicData> parabolics;
  for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) parabolics.push_back(build_parabolic(L, I));

  Tally shadow(names[0], samples_text(samples) + " (I, u, x): f(u + x) = f(x) for u in u_I, x in l_I");
  Tally forward(names[1], samples_text(samples) + " translated fiber-algebra pairs");
  for (int k = 0; k < samples; ++k) {
    const ParabolicData& P = parabolics[random_subset(rng, L)];
    const Vec u = random_in(rng, P.u), x = random_in(rng, P.levi), v = random_in(rng, P.u_minus);
    const auto describe = [&] { return "I = " + subset_label(P.subset) + ", x = " + fmt(x); };
    shadow.record(invariants_eval(L, Vec(u + x)) == invariants_eval(L, x), describe);
    const GroupElement g1 = random_group_element(rng, m), g2 = random_group_element(rng, m);
    forward.record(in_fiber_product(L, conjugate(L, g1, Vec(u + x)), conjugate(L, g2, Vec(v + x))),
                   describe);
  }
  out.details.push_back(shadow.finish());
  out.details.push_back(forward.finish());

  Tally split(names[2], samples_text(samples) + " (s + n, s + n') with s regular in the Cartan");
  Tally conj(names[3], samples_text(samples));
  for (int k = 0; k < samples; ++k) {
    const SplitSlicePoint p = random_split_slice_point(rng, L, S);
    Mat diag = Mat::Zero(m, m);
    for (Index i = 0; i < m; ++i) diag(i, i) = p.eigenvalues[static_cast<std::size_t>(i)];
    const Vec s = L.from_matrix(diag);
    const Vec x = s + random_in(rng, L.nilradical()), y = s + random_in(rng, L.opposite_nilradical());
    const GroupElement g1 = random_group_element(rng, m), g2 = random_group_element(rng, m);
    const Vec gx = conjugate(L, g1, x), gy = conjugate(L, g2, y);
    split.record(in_fiber_product(L, gx, gy) &&
                     translate_contains(make_boundary_point(L, 0, g1, g2), gx, gy),
                 [&] { return "s = " + fmt(s); });
    const Vec z = rng.vector(L.dim());
    conj.record(in_fiber_product(L, z, conjugate(L, g1, z)), [&] { return "x = " + fmt(z); });
  }
  out.details.push_back(split.finish());
  out.details.push_back(conj.finish());

  const InvariantSystem inv(L);
  const int jac_samples = std::max(1, samples / 2);
  Tally jac(names[4], samples_text(jac_samples) + " (x, g x) with x regular semisimple, rank " +
                          std::to_string(L.rank()));
  for (int k = 0; k < jac_samples; ++k) {
    const SplitSlicePoint p = random_split_slice_point(rng, L, S);
    const Vec x = conjugate(L, random_group_element(rng, m), p.xi);
    const Vec y = conjugate(L, random_group_element(rng, m), x);
    jac.record(jacobian_rank_at(inv, x, y) == L.rank(), [&] { return "x = " + fmt(x); });
  }
  out.details.push_back(jac.finish());
  out.details.push_back(exact(names[5], "(0, 0)", "0",
                              std::to_string(jacobian_rank_at(inv, L.zero(), L.zero()))));
}

void wonderful_suite(const LieAlgebra& L, Sampler& rng, int samples, SuiteResult& out) {
  const Index n = L.dim();
  const int l = L.rank();
  const std::string all_subsets = "all " + std::to_string(1u << l) + " subsets I";
  Tally dims("fiber algebra dimension", all_subsets + ": dim = " + std::to_string(n));
  Tally closed("fiber algebra closed under bracket", all_subsets);
  Tally stab("stabilizer contains fiber with codimension l - |I|", all_subsets);
  Tally orbit("orbit dimension matches stabilizer", all_subsets + ": 2n - dim stabilizer = orbit_dim");
  Tally parabolic("parabolic decompositions", all_subsets);
  for (RootSubset I = 0; I <= full_subset(l); ++I) {
    const ParabolicData P = build_parabolic(L, I);
    const RatSubspace fiber = fiber_algebra(L, P), st = stabilizer_algebra(L, P);
    const auto describe = [&] { return "I = " + subset_label(I); };
    dims.record(fiber.dim() == n, describe);
    closed.record(is_pair_subalgebra(L, fiber), describe);
    stab.record(st.contains(fiber) && st.dim() - fiber.dim() == l - subset_size(I), describe);
    orbit.record(2 * n - st.dim() == orbit_dim(L, P), describe);
    parabolic.record(sum(P.levi, P.u) == P.p && P.p.dim() == P.levi.dim() + P.u.dim() &&
                         intersect(P.p, P.p_minus) == P.levi &&
                         P.center.dim() == l - subset_size(I) &&
                         is_direct_complement(sum(P.derived, P.u_minus), P.center),
                     describe);
  }
  for (Tally* t : {&dims, &closed, &stab, &orbit, &parabolic}) out.details.push_back(t->finish());

  const OrbitPoset poset = build_orbit_poset(L);
  out.details.push_back(exact("boundary divisors", "orbits of codimension one", std::to_string(l),
                              std::to_string(poset.num_divisors(L))));
  out.details.push_back(exact("open orbit dimension", "I = all simple roots", std::to_string(n),
                              std::to_string(poset.orbits.back().dim)));
  Tally closure("closure order", "all pairs J strictly inside I: dim O_J < dim O_I");
  for (const auto& a : poset.orbits)
    for (const auto& b : poset.orbits)
      if (a.subset != b.subset && closure_contains(a.subset, b.subset))
        closure.record(b.dim < a.dim,
                       [&] { return subset_label(b.subset) + " in " + subset_label(a.subset); });
  out.details.push_back(closure.finish());

  if (!L.has_matrix_realization()) {
    out.details.push_back(not_applicable("interior translate is the graph of Ad"));
    out.details.push_back(not_applicable("torus-fixed points"));
    return;
  }
  const Index m = L.realization_size();
  const int graph_samples = std::max(1, samples / 10);
  Tally graph("interior translate is the graph of Ad", samples_text(graph_samples));
  const GroupElement id = GroupElement::identity(m);
  for (int k = 0; k < graph_samples; ++k) {
    const GroupElement g = random_group_element(rng, m);
    std::vector<Vec> gens;
    for (Index j = 0; j < n; ++j)
      gens.push_back(pair_vector(conjugate(L, g, L.basis_vector(j)), L.basis_vector(j)));
    graph.record(make_boundary_point(L, full_subset(l), g, id).realized_fiber() ==
                     RatSubspace::span(gens, 2 * n),
                 [&] { return "sample " + std::to_string(k); });
  }
  out.details.push_back(graph.finish());

  if (l > 3) {
    CheckDetail d = not_applicable("torus-fixed points");
    d.inputs = "enumeration limited to rank 3";
    out.details.push_back(d);
    return;
  }
  const KostantSlice S = build_slice(L, build_principal_triple(L));
  const SplitSlicePoint p = random_split_slice_point(rng, L, S);
  const auto points = torus_fixed_fiber_points(L, p.xi, diagonalizer(L, p.xi, p.eigenvalues));
  out.details.push_back(exact("torus-fixed points", "regular semisimple slice point " + fmt(p.xi),
                              std::to_string(expected_fixed_points(l)), std::to_string(points.size())));
  Tally contains("torus-fixed points lie in the fiber", "every returned point contains (xi, xi)");
  for (const auto& b : points)
    contains.record(translate_contains(b, p.xi, p.xi), [&] { return subset_label(b.subset()); });
  out.details.push_back(contains.finish());
}

void logsympl_suite(const LieAlgebra& L, Sampler& rng, int samples, SuiteResult& out) {
  const Index n = L.dim();
  const int l = L.rank();
  const int points = 2 * samples;
  Tally inverse("bivector inverts omega", std::to_string(points) + " off-divisor points per chart");
  Tally ranks("stratum rank", "all S in I: rank = 2n - 2|S|");
  Tally sampled("stratum rank at sampled points", "5 points per stratum");
  Tally casimir("sigma Casimirs on strata", "5 points per stratum");
  Tally poles("pole on the divisor", "omega at each basepoint with I nonempty");
  for (RootSubset I = 0; I <= full_subset(l); ++I) {
    const Chart c(L, I);
    for (int k = 0; k < points; ++k) {
      const ChartPoint p = stratum_point(c, 0, rng);
      inverse.record(sparse_product(bivector_matrix(p), omega_matrix(p)) == Mat::Identity(c.size(), c.size()),
                     [&] { return "I = " + subset_label(I) + ", point " + fmt(p.values()); });
    }
    for (RootSubset Sub = 0; Sub <= I; ++Sub) {
      if (Sub & ~I) continue;
      const auto describe = [&] { return "I = " + subset_label(I) + ", S = " + subset_label(Sub); };
      const Index expected = 2 * n - 2 * subset_size(Sub);
      ranks.record(stratum_rank(c, Sub) == expected, describe);
      for (int k = 0; k < 5; ++k)
        sampled.record(rank(bivector_matrix(stratum_point(c, Sub, rng))) == expected, describe);
      casimir.record(casimir_check(c, Sub, rng, 5), describe);
    }
    if (I != 0) {
      bool threw = false;
      try {
        omega_matrix(ChartPoint::basepoint(c));
      } catch (const PoleError&) {
        threw = true;
      }
      poles.record(threw, [&] { return "I = " + subset_label(I); });
    }
  }
  for (Tally* t : {&inverse, &ranks, &sampled, &casimir, &poles}) out.details.push_back(t->finish());

  // Rank table of the chart at I = all simple roots.
  const Chart top(L, full_subset(l));
  std::string expected, got;
  for (RootSubset Sub = 0; Sub <= full_subset(l); ++Sub) {
    const std::string sep = Sub ? ", " : "";
    expected += sep + subset_label(Sub) + ":" + std::to_string(2 * n - 2 * subset_size(Sub));
    got += sep + subset_label(Sub) + ":" + std::to_string(stratum_rank(top, Sub));
  }
  out.details.push_back(exact("rank table", "strata of the chart at I = all simple roots",
                              "{" + expected + "}", "{" + got + "}"));

  Tally leaf("same leaf matches center projection",
             samples_text(samples) + " pairs per I, half on a common leaf");
  Tally coherence("chart and leaf data coherent", samples_text(samples) + " per I");
  for (RootSubset I = 0; I <= full_subset(l); ++I) {
    const ParabolicData P = build_parabolic(L, I);
    const RatSubspace fiber = fiber_algebra(L, P);
    for (int k = 0; k < samples; ++k) {
      const Vec a = random_in(rng, fiber);
      Vec b = random_in(rng, fiber);
      const Vec sa = fiber_sigma_coordinates(L, P, a);
      if (rng.coin()) {
        const Vec shift = P.center.combine(Vec(sa - fiber_sigma_coordinates(L, P, b)));
        b += pair_vector(shift, shift);
      }
      const auto describe = [&] { return "I = " + subset_label(I) + ", a = " + fmt(a); };
      leaf.record(same_leaf(L, P, a, b) == (sa == fiber_sigma_coordinates(L, P, b)), describe);
      coherence.record(leaf_label(L, P, first_component(L, a)) == sa, describe);
    }
  }
  out.details.push_back(leaf.finish());
  out.details.push_back(coherence.finish());
}

void reduction_suite(const LieAlgebra& L, Sampler& rng, int samples, SuiteResult& out) {
  const KostantSlice S = build_slice(L, build_principal_triple(L));
  const Vec& f = S.triple().f;
  out.details.push_back(exact("level set examples", "(f, f) and (h, f)", "true, false",
                              std::string(level_set_contains(L, S, f, f) ? "true" : "false") + ", " +
                                  (level_set_contains(L, S, S.triple().h, f) ? "true" : "false")));
  Tally member("level set membership", samples_text(samples) + " pairs in (f + b)^2");
  Tally free("N x N freeness", samples_text(samples) + " pairs in (f + b)^2");
  for (int k = 0; k < samples; ++k) {
    const Vec x = random_f_plus_b(rng, L, S), y = random_f_plus_b(rng, L, S);
    const auto describe = [&] { return "x = " + fmt(x) + ", y = " + fmt(y); };
    member.record(level_set_contains(L, S, x, y), describe);
    free.record(nxn_freeness(L, x, y), describe);
  }
  out.details.push_back(member.finish());
  out.details.push_back(free.finish());

  const char* const names[] = {"level set roundtrip", "reduced point centralizes",
                               "reduction preserves invariants", "reduction is N x N invariant"};
  if (!L.has_matrix_realization()) {
    for (const char* nm : names) out.details.push_back(not_applicable(nm));
    return;
  }
  const Index m = L.realization_size();
  Tally roundtrip(names[0], samples_text(samples) + ": (n1 gamma n2^-1, n2 xi_S) -> (gamma, xi_S)");
  Tally centralizes(names[1], samples_text(samples));
  Tally invariants(names[2], samples_text(samples));
  Tally invariant(names[3], samples_text(samples));
  for (int k = 0; k < samples; ++k) {
    Vec xi_s;
    GroupElement gamma = GroupElement::identity(m);
    if (k % 4 == 0) {
      xi_s = f;
      gamma = random_nilpotent_centralizer(rng, L, f);
    } else {
      const SplitSlicePoint p = random_split_slice_point(rng, L, S);
      xi_s = p.xi;
      gamma = random_split_centralizer(rng, L, p);
    }
    const GroupElement n1 = random_unipotent(rng, m), n2 = random_unipotent(rng, m);
    const Vec xi = conjugate(L, n2, xi_s);
    const GroupElement g = n1 * gamma * n2.inverse();
    const auto describe = [&] { return "xi_S = " + fmt(xi_s); };
    const ReducedPoint r = level_set_normalize(L, S, g, xi);
    roundtrip.record(r.g == gamma && r.xi == xi_s, describe);
    centralizes.record(conjugate(L, r.g, r.xi) == r.xi, describe);
    invariants.record(invariants_eval(L, xi) == invariants_eval(L, r.xi), describe);
    const GroupElement a = random_unipotent(rng, m), b = random_unipotent(rng, m);
    const ReducedPoint again = level_set_normalize(L, S, a * g * b.inverse(), conjugate(L, b, xi));
    invariant.record(again.g == r.g && again.xi == r.xi, describe);
  }
  for (Tally* t : {&roundtrip, &centralizes, &invariants, &invariant}) out.details.push_back(t->finish());
}

}  // namespace

SuiteResult run_suite(const LieAlgebra& L, const std::string& name, std::uint64_t seed,
                      int samples) {
  using Runner = void (*)(const LieAlgebra&, Sampler&, int, SuiteResult&);
  static const std::vector<std::pair<std::string, Runner>> runners = {
      {"kostant", kostant_suite},   {"moment", moment_suite},       {"wonderful", wonderful_suite},
      {"logsympl", logsympl_suite}, {"reduction", reduction_suite}};
  const auto it = std::find_if(runners.begin(), runners.end(),
                               [&](const auto& r) { return r.first == name; });
  if (it == runners.end()) throw std::invalid_argument("unknown suite: " + name);
  SuiteResult out;
  out.name = name;
  Sampler rng(stream_seed(seed, name));
  const auto start = std::chrono::steady_clock::now();
  it->second(L, rng, samples, out);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Report run_verify(const LieAlgebra& L, const std::vector<std::string>& suites, std::uint64_t seed,
                  int samples) {
  Report r;
  r.algebra = L.label();
  r.seed = seed;
  for (const auto& name : suites) r.suites.push_back(run_suite(L, name, seed, samples));
  return r;
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["algebra"] = r.algebra;
  j["seed"] = r.seed;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : r.suites) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    sj["passed"] = s.passed();
    sj["total"] = s.total();
    sj["details"] = nlohmann::ordered_json::array();
    for (const auto& d : s.details) {
      nlohmann::ordered_json dj;
      dj["check"] = d.check;
      dj["inputs"] = d.inputs;
      dj["expected"] = d.expected;
      dj["got"] = d.got;
      dj["passed"] = d.passed;
      dj["total"] = d.total;
      if (d.failure) dj["failure"] = *d.failure;
      sj["details"].push_back(std::move(dj));
    }
    j["suites"].push_back(std::move(sj));
  }
  return j;
}

std::string report_text(const Report& r) {
  std::size_t width = 5;
  for (const auto& s : r.suites)
    for (const auto& d : s.details) width = std::max(width, d.check.size());
  std::ostringstream os;
  os << "algebra " << r.algebra << ", seed " << r.seed << "\n";
  for (const auto& s : r.suites) {
    os << "\n" << s.name << ": " << s.passed() << "/" << s.total() << " passed (" << std::fixed
       << std::setprecision(2) << s.seconds << " s)\n";
    for (const auto& d : s.details) {
      const char* status = d.total == 0 ? "n/a " : d.passed == d.total ? "pass" : "FAIL";
      os << "  " << status << "  " << std::left << std::setw(static_cast<int>(width)) << d.check
         << "  " << std::right << std::setw(9) << (std::to_string(d.passed) + "/" + std::to_string(d.total))
         << "  expected " << d.expected << ", got " << d.got << "\n";
      if (d.failure) os << "        first failure: " << *d.failure << "\n";
    }
  }
  os << "\n" << (r.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

nlohmann::ordered_json describe_json(const LieAlgebra& L) {
  const PrincipalTriple t = build_principal_triple(L);
  const KostantSlice S = build_slice(L, t);
  nlohmann::ordered_json j;
  j["algebra"] = L.label();
  j["dimension"] = L.dim();
  j["rank"] = L.rank();
  j["positive_roots"] = L.num_positive();
  j["triple"] = {{"e", to_strings(t.e)}, {"h", to_strings(t.h)}, {"f", to_strings(t.f)}};
  j["slice_degrees"] = S.degrees();
  j["orbits"] = nlohmann::ordered_json::array();
  for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
    const ParabolicData P = build_parabolic(L, I);
    std::vector<int> divisors;
    for (int i = 0; i < L.rank(); ++i)
      if (!(I & (1u << i))) divisors.push_back(i + 1);
    nlohmann::ordered_json o;
    o["subset"] = subset_label(I);
    o["orbit_dim"] = orbit_dim(L, P);
    o["stabilizer_dim"] = stabilizer_algebra(L, P).dim();
    o["divisors"] = divisors;
    j["orbits"].push_back(std::move(o));
  }
  return j;
}

std::string describe_text(const LieAlgebra& L) {
  const nlohmann::ordered_json j = describe_json(L);
  std::ostringstream os;
  os << L.label() << ": n = " << L.dim() << ", l = " << L.rank() << ", positive roots "
     << L.num_positive() << "\n";
  std::vector<int> degrees = j["slice_degrees"];
  os << "slice degrees " << fmt(degrees) << "\n";
  os << "principal triple (Chevalley coordinates)\n";
  for (const char* k : {"e", "h", "f"}) {
    os << "  " << k << " =";
    for (const auto& v : j["triple"][k]) os << " " << v.get<std::string>();
    os << "\n";
  }
  os << "\n" << std::left << std::setw(12) << "subset" << std::right << std::setw(10) << "orbit_dim"
     << std::setw(16) << "stabilizer_dim" << "  divisors\n";
  for (const auto& o : j["orbits"]) {
    std::vector<int> divisors = o["divisors"];
    os << std::left << std::setw(12) << o["subset"].get<std::string>() << std::right << std::setw(10)
       << o["orbit_dim"].get<Index>() << std::setw(16) << o["stabilizer_dim"].get<Index>() << "  "
       << fmt(divisors) << "\n";
  }
  return os.str();
}

}  // namespace ucz

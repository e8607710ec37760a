#include "biclique/crosscheck.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "biclique/alphan.hpp"
#include "biclique/atlas.hpp"
#include "biclique/chromatic.hpp"
#include "biclique/errors.hpp"
#include "biclique/io.hpp"
#include "biclique/matchings.hpp"
#include "biclique/oracle.hpp"
#include "biclique/reflect.hpp"

namespace biclique::crosscheck {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BicliqueSpec random_spec(Rng& rng, int j, int k) {
  std::bernoulli_distribution coin(0.5);
  std::vector<ComplementEdge> edges;
  for (int l = 0; l < j; ++l) {
    for (int r = 0; r < k; ++r) {
      if (coin(rng)) edges.emplace_back(l, r);
    }
  }
  return BicliqueSpec(j, k, std::move(edges));
}

BicliqueSpec random_strict_spec(Rng& rng, int j, int k) {
  while (true) {
    BicliqueSpec spec = random_spec(rng, j, k);
    if (spec.is_strict()) return spec;
  }
}

// Collects the first few failures of a check.
class Tally {
 public:
  void pass() { ++cases_; }
  void fail(const std::string& what) {
    ++cases_;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }

  std::uint64_t cases() const { return cases_; }
  bool ok() const { return failures_ == 0 && cases_ > 0; }
  std::string detail(const std::string& summary) const {
    if (failures_ == 0) return summary;
    return std::to_string(failures_) + " failure(s): " + notes_.str();
  }

 private:
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::ostringstream notes_;
};

CheckResult timed(std::string id, std::string title, const std::function<void(Tally&, std::string&)>& body) {
  CheckResult result;
  result.id = std::move(id);
  result.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  std::string summary;
  try {
    body(tally, summary);
  } catch (const std::exception& e) {
    tally.fail(std::string("exception: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = tally.ok();
  result.cases = tally.cases();
  result.detail = tally.detail(summary);
  return result;
}

std::string describe(const BicliqueSpec& spec) { return io::spec_to_json(spec).dump(); }

Integer signed_at_minus_one(const IntPoly& p, int order) {
  const Integer v = eval_int(p, -1);
  return order % 2 == 0 ? v : Integer(-v);
}

SimpleGraph cycle(int n) {
  SimpleGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v) {
    const int w = (v + 1) % n;
    g.edges.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph wheel(int rim) {
  SimpleGraph g = cycle(rim);
  g.n = rim + 1;
  for (int v = 0; v < rim; ++v) g.edges.emplace_back(v, rim);
  return g;
}

SimpleGraph complete_bipartite(int p, int q) {
  SimpleGraph g;
  g.n = p + q;
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) g.edges.emplace_back(u, p + v);
  }
  return g;
}

IntPoly grid_cubic(int a2, int a1, int a0) { return IntPoly{a0, a1, a2, 1}; }

}  // namespace

Budget Budget::quick() {
  Budget b;
  b.random_chromatic = 60;
  b.random_transform = 100;
  b.random_partner = 100;
  b.exhaustive_order = 6;
  b.params_max = 2;
  b.family_max = 3;
  b.orientation_order = 6;
  b.grid_radius = 4;
  b.numeric_samples = 10;
  return b;
}

CheckResult check_oracle_equivalence(const Budget& budget) {
  return timed("1", "chromatic polynomial from matchings equals deletion-contraction",
               [&](Tally& tally, std::string& summary) {
    auto compare = [&](const BicliqueSpec& spec) {
      const IntPoly formula = chromatic_polynomial(spec);
      const IntPoly oracle = oracle::chromatic_poly_bruteforce(to_simple_graph(spec));
      tally.expect(formula == oracle, [&] { return "mismatch on " + describe(spec); });
    };
    std::uint64_t exhaustive = 0;
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; j + k <= budget.exhaustive_order; ++k) {
        const int bits = j * k;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
          std::vector<ComplementEdge> edges;
          for (int b = 0; b < bits; ++b) {
            if (mask >> b & 1) edges.emplace_back(b / k, b % k);
          }
          compare(BicliqueSpec(j, k, std::move(edges)));
          ++exhaustive;
        }
      }
    }
    Rng rng(budget.seed);
    for (int n = 0; n < budget.random_chromatic; ++n) {
      compare(random_spec(rng, uniform(rng, 1, 4), uniform(rng, 1, 8)));
    }
    summary = std::to_string(exhaustive) + " exhaustive + " +
              std::to_string(budget.random_chromatic) + " random specs";
  });
}

CheckResult check_factor_routes(const Budget& budget) {
  return timed("2", "matching-sum factor equals inclusion-exclusion factor on (3,k) tuples",
               [&](Tally& tally, std::string& summary) {
    const int top = budget.params_max;
    std::array<int, 6> v{};
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == 6) {
        const ThreeCliqueParams p(v[0], v[1], v[2], v[3], v[4], v[5]);
        const IntPoly cp = interesting_factor_3k(p);
        // k = 0 is K_3 alone: the matching sum degenerates to (x)_3.
        const IntPoly eq2 = p.k() == 0 ? falling_factorial(3) : left_clique_factor(from_params(p));
        tally.expect(cp == eq2, [&] {
          return p.to_string() + ": " + cp.to_string() + " vs " + eq2.to_string();
        });
        return;
      }
      for (v[pos] = 0; v[pos] <= top; ++v[pos]) walk(pos + 1);
    };
    walk(0);
    summary = "all tuples in [0," + std::to_string(top) + "]^6";
  });
}

CheckResult check_complement_transform(const Budget& budget) {
  return timed("3", "complement matching transform equals direct enumeration",
               [&](Tally& tally, std::string& summary) {
    Rng rng(budget.seed + 3);
    for (int n = 0; n < budget.random_transform; ++n) {
      const int j = uniform(rng, 1, 4);
      const int k = uniform(rng, j, 8);
      const BicliqueSpec h = random_spec(rng, j, k);
      const BicliqueSpec g = complement_partner(h);
      const MatchingNumbers mh = oracle::matchings_bruteforce(j, k, h.complement_edges());
      const MatchingNumbers mg = oracle::matchings_bruteforce(j, k, g.complement_edges());
      const MatchingNumbers transformed = complement_matching_numbers(mh, j, k);
      const MatchingNumbers back = complement_matching_numbers(transformed, j, k);
      tally.expect(transformed == mg && back == mh,
                   [&] { return "transform mismatch on " + describe(h); });
    }
    summary = std::to_string(budget.random_transform) + " random subgraphs of K_{j,k}, j<=4, k<=8";
  });
}

CheckResult check_complementary_partner(const Budget& budget) {
  return timed("4", "complementary partners reflect with c = j + k - 1",
               [&](Tally& tally, std::string& summary) {
    Rng rng(budget.seed + 4);
    for (int n = 0; n < budget.random_partner; ++n) {
      const int j = uniform(rng, 1, 4);
      const int k = uniform(rng, j, 8);
      const BicliqueSpec g = random_strict_spec(rng, j, k);
      const BicliqueSpec h = complement_partner(g);
      const auto c = find_reflection(interesting_factor(g), interesting_factor(h));
      const Integer expected = j + k - 1;
      const bool condition =
          theorem2_condition(matching_numbers(g), matching_numbers(h), j, k, k, expected);
      tally.expect(c && *c == expected && condition, [&] {
        return "partner reflection failed on " + describe(g) +
               (c ? " (c=" + c->get_str() + ")" : " (no reflection)");
      });
    }
    summary = std::to_string(budget.random_partner) + " random strict specs, j<=4, k<=8";
  });
}

CheckResult check_families(const Budget& budget) {
  return timed("5", "reflection families: shifts 6t+4, 2s+6t+4, 6s+2t^2+4t+6",
               [&](Tally& tally, std::string& summary) {
    std::array<std::uint64_t, 3> feasible{};
    const int top = budget.family_max;
    for (int prop = 5; prop <= 7; ++prop) {
      for (int r = 0; r <= top; ++r)
        for (int s = 0; s <= top; ++s)
          for (int t = 0; t <= top; ++t)
            for (int u = 0; u <= top; ++u) {
              FamilyPair pair;
              try {
                pair = family_pair(prop, r, s, t, u);
              } catch (const InfeasibleFamily&) {
                continue;
              }
              ++feasible[prop - 5];
              const Integer expected = prop == 5   ? Integer(6 * t + 4)
                                       : prop == 6 ? Integer(2 * s + 6 * t + 4)
                                                   : Integer(6 * s + 2 * t * t + 4 * t + 6);
              const BicliqueSpec gs = from_params(pair.g);
              const BicliqueSpec hs = from_params(pair.h);
              const IntPoly g = left_clique_factor(gs);
              const IntPoly h = left_clique_factor(hs);
              const auto c = find_reflection(g, h);
              const bool condition = theorem2_condition(matching_numbers(gs), matching_numbers(hs),
                                                        3, gs.k(), hs.k(), expected);
              const bool routes = g == interesting_factor_3k(pair.g) &&
                                  h == interesting_factor_3k(pair.h);
              tally.expect(c && *c == expected && pair.c == expected && condition && routes, [&] {
                std::ostringstream os;
                os << "family " << prop << " (r,s,t,u)=(" << r << ',' << s << ',' << t << ',' << u
                   << ") c=" << (c ? c->get_str() : "none") << " expected " << expected.get_str();
                return os.str();
              });
            }
    }
    summary = std::to_string(feasible[0]) + "/" + std::to_string(feasible[1]) + "/" +
              std::to_string(feasible[2]) + " feasible tuples for the three families";
  });
}

CheckResult check_acyclic_instance() {
  return timed("6", "P_G(6) = C(6,3) * acyclic orientations of the partner (8520 = 20 * 426)",
               [&](Tally& tally, std::string& summary) {
    const BicliqueSpec g = from_params(ThreeCliqueParams(1, 1, 1, 0, 0, 0));
    const BicliqueSpec h = from_params(ThreeCliqueParams(0, 0, 0, 1, 1, 1));
    const Integer lhs = eval_int(chromatic_polynomial(g), 6);
    const std::uint64_t colourings = oracle::count_colourings(to_simple_graph(g), 6);
    const std::uint64_t orientations = oracle::acyclic_orientations_bruteforce(to_simple_graph(h));
    const Integer rhs = binomial(6, 3) * Integer(static_cast<unsigned long>(orientations));
    tally.expect(lhs == 8520, [&] { return "P_G(6) = " + lhs.get_str(); });
    tally.expect(colourings == 8520, [&] { return "6-colourings = " + std::to_string(colourings); });
    tally.expect(orientations == 426,
                 [&] { return "acyclic orientations = " + std::to_string(orientations); });
    tally.expect(lhs == rhs, [&] { return "identity " + lhs.get_str() + " != " + rhs.get_str(); });
    tally.expect(reflection_count_identity(g, h, 5), [] { return "reflection_count_identity false"; });
    tally.expect(acyclic_count(h) == 426, [&] { return "acyclic_count = " + acyclic_count(h).get_str(); });
    summary = "P_G(6) = 8520 = 20 * 426";
  });
}

CheckResult check_orientations(const Budget& budget) {
  return timed("7", "(-1)^n P(-1) equals the brute-force acyclic orientation count",
               [&](Tally& tally, std::string& summary) {
    std::uint64_t graphs = 0;
    auto check_graph = [&](const SimpleGraph& graph, const IntPoly* formula, const std::string& name) {
      const std::uint64_t count = oracle::acyclic_orientations_bruteforce(graph, 21);
      const Integer brute = Integer(static_cast<unsigned long>(count));
      const Integer dc = signed_at_minus_one(oracle::chromatic_poly_bruteforce(graph), graph.n);
      bool ok = dc == brute;
      if (formula) ok = ok && signed_at_minus_one(*formula, graph.n) == brute;
      tally.expect(ok, [&] { return name + ": orientations " + brute.get_str() + ", oracle " + dc.get_str(); });
      ++graphs;
    };
    for (int order = 2; order <= budget.orientation_order; ++order) {
      for (int j = 1; 2 * j <= order; ++j) {
        for (const BicliqueSpec& spec : distinct_bicliques(j, order - j)) {
          const IntPoly formula = chromatic_polynomial(spec);
          check_graph(to_simple_graph(spec), &formula, describe(spec));
        }
      }
    }
    for (int n = 3; n <= budget.orientation_order; ++n) check_graph(cycle(n), nullptr, "C" + std::to_string(n));
    if (budget.orientation_order >= 6) check_graph(wheel(5), nullptr, "W5");
    if (budget.orientation_order >= 7) check_graph(wheel(6), nullptr, "W6");
    check_graph(complete_bipartite(2, 3), nullptr, "K23");
    if (budget.orientation_order >= 6) check_graph(complete_bipartite(3, 3), nullptr, "K33");
    summary = std::to_string(graphs) + " graphs with <= " + std::to_string(budget.orientation_order) +
              " vertices";
  });
}

CheckResult check_alphan_grid(const Budget& budget) {
  return timed("8", "alpha+n construction over the reduced-cubic grid",
               [&](Tally& tally, std::string& summary) {
    const int rad = budget.grid_radius;
    for (int a2 = -1; a2 <= 1; ++a2)
      for (int a1 = -rad; a1 <= rad; ++a1)
        for (int a0 = -rad; a0 <= rad; ++a0) {
          const IntPoly q = grid_cubic(a2, a1, a0);
          const AlphaNResult first = alpha_plus_n(q);
          const AlphaNResult again = alpha_plus_n(q);
          const bool constraints = first.params.all_non_negative() &&
                                   first.n >= 2 * first.state.i + 3 && first.N >= 0 &&
                                   first.params.b() == first.n - 2 * first.state.i - 3 &&
                                   first.params.d() == first.state.i + 1;
          const bool certificate = first.verified &&
                                   interesting_factor_3k(first.params) == shift_poly(q, -first.N);
          const bool deterministic = io::alphan_to_json(first) == io::alphan_to_json(again);
          tally.expect(constraints && certificate && deterministic, [&] {
            return q.to_string() + ": constraints=" + std::to_string(constraints) +
                   " certificate=" + std::to_string(certificate) +
                   " deterministic=" + std::to_string(deterministic);
          });
        }
    summary = std::to_string(tally.cases()) + " cubics";
  });
}

CheckResult check_alphan_named() {
  return timed("9", "named alpha+n instances (x^3+5x^2+x+1 and x^3)",
               [&](Tally& tally, std::string& summary) {
    const IntPoly q1{1, 1, 5, 1};
    const Reduction red = reduce_cubic(q1);
    tally.expect(red.n0 == 2 && red.cubic.poly() == IntPoly{11, -7, -1, 1},
                 [&] { return "reduction gave " + red.cubic.poly().to_string(); });
    const AlphaNResult r1 = alpha_plus_n(q1);
    tally.expect(r1.verified && r1.n0 == 2 && r1.N == r1.n + 2 &&
                     interesting_factor_3k(r1.params) == shift_poly(q1, -r1.N) &&
                     left_clique_factor(from_params(r1.params)) == shift_poly(q1, -r1.N),
                 [&] { return "certificate failed for " + q1.to_string(); });

    const IntPoly cube = IntPoly::monomial(3);
    const AlphaNResult r2 = alpha_plus_n(cube);
    const IntPoly target = IntPoly::linear_factor(15) * IntPoly::linear_factor(15) *
                           IntPoly::linear_factor(15);
    tally.expect(r2.params == ThreeCliqueParams(13, 8, 1, 3, 5, 2) && r2.n == 15 && r2.N == 15,
                 [&] { return "x^3 gave " + r2.params.to_string() + " n=" + r2.n.get_str(); });
    tally.expect(r2.g == target && left_clique_factor(from_params(r2.params)) == target,
                 [&] { return "x^3 certificate " + r2.g.to_string(); });
    summary = "x^3+5x^2+x+1: N=" + r1.N.get_str() + ", x^3: N=15";
  });
}

CheckResult check_numeric_roots(const Budget& budget) {
  return timed("10", "floating roots shifted by N are near-zeros of P_G",
               [&](Tally& tally, std::string& summary) {
    const int rad = budget.grid_radius;
    const int total = 3 * (2 * rad + 1) * (2 * rad + 1);
    const int stride = std::max(1, total / std::max(1, budget.numeric_samples));
    long double worst = -std::numeric_limits<long double>::infinity();
    int index = 0;
    int sampled = 0;
    for (int a2 = -1; a2 <= 1; ++a2)
      for (int a1 = -rad; a1 <= rad; ++a1)
        for (int a0 = -rad; a0 <= rad; ++a0, ++index) {
          if (index % stride != 0 || sampled >= budget.numeric_samples) continue;
          ++sampled;
          const IntPoly q = grid_cubic(a2, a1, a0);
          const AlphaNResult r = alpha_plus_n(q);
          const auto residuals = root_residuals(r);
          bool ok = residuals.size() == 3;
          for (const auto& res : residuals) {
            ok = ok && res.within(1e-6L);
            worst = std::max(worst, res.log10_residual - res.log10_scale);
          }
          tally.expect(ok, [&] { return "root residual too large for " + q.to_string(); });
        }
    std::ostringstream os;
    os << sampled << " cubics, worst log10(|P_G|/scale) = " << static_cast<double>(worst);
    summary = os.str();
  });
}

std::vector<CheckResult> run_all(const Budget& budget) {
  return {check_oracle_equivalence(budget), check_factor_routes(budget), check_complement_transform(budget),
          check_complementary_partner(budget), check_families(budget), check_acyclic_instance(),
          check_orientations(budget), check_alphan_grid(budget), check_alphan_named(),
          check_numeric_roots(budget)};
}

}  // namespace biclique::crosscheck

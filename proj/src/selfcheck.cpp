#include "graphjac/selfcheck.hpp"

#include <exception>
#include <random>
#include <tuple>
#include <utility>

#include "graphjac/dlp.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/oracle.hpp"
#include "graphjac/pairing.hpp"

namespace graphjac::selfcheck {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  template <class Describe>
  void check(bool ok, Describe&& what) {
    ++r_.cases;
    if (!ok && r_.failures++ == 0) r_.first_failure = what();
  }

  void exception(const std::string& where, const std::exception& e) {
    ++r_.cases;
    if (r_.failures++ == 0) r_.first_failure = where + ": " + e.what();
  }

  CheckResult take() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string pair_text(const std::string& graph, const Divisor& a,
                      const Divisor& b) {
  return graph + " D1=" + format_divisor(a) + " D2=" + format_divisor(b);
}

// Runs body(name, g) for every corpus graph, turning exceptions into failures.
template <class Body>
void for_each_graph(const std::vector<NamedGraph>& corpus, Recorder& rec,
                    Body&& body) {
  for (const auto& [name, g] : corpus) {
    try {
      body(name, g);
    } catch (const std::exception& e) {
      rec.exception(name, e);
    }
  }
}

std::vector<GeneralizedInverse> all_inverses(const MultiGraph& g) {
  std::vector<GeneralizedInverse> out;
  for (Vertex i = 0; i < g.vertex_count(); ++i)
    out.push_back(gen_inverse_minor(g, i));
  out.push_back(moore_penrose(g));
  return out;
}

std::size_t family_size(Family f, std::size_t i) {
  return f == Family::Banana ? 2 + i % 30 : 3 + i % 40;
}

}  // namespace

CheckResult pairing_axioms(const std::vector<NamedGraph>& corpus,
                           const Options& opt) {
  Recorder rec("pairing-axioms");
  std::mt19937_64 rng(opt.seed);
  for_each_graph(corpus, rec, [&](const std::string& name, const MultiGraph& g) {
    const JacobianStructure s = analyze(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 0; k < opt.pairs_per_graph; ++k) {
      const Divisor a = random_divisor(n, rng, 4);
      const Divisor a2 = random_divisor(n, rng, 4);
      const Divisor b = random_divisor(n, rng, 4);
      const PairingValue ab = s.pair(a, b);
      rec.check(s.pair(a + a2, b) == ab + s.pair(a2, b), [&] {
        return "bilinearity: " + pair_text(name, a, b) +
               " D1'=" + format_divisor(a2);
      });
      rec.check(s.pair(b, a) == ab,
                [&] { return "symmetry: " + pair_text(name, a, b); });
      const Divisor la = random_lift(g, a, rng, 5);
      const Divisor lb = random_lift(g, b, rng, 5);
      rec.check(s.pair(la, b) == ab, [&] {
        return "well-defined (D1 lifted): " + pair_text(name, a, b);
      });
      rec.check(s.pair(a, lb) == ab, [&] {
        return "well-defined (D2 lifted): " + pair_text(name, a, b);
      });
    }
  });
  return rec.take();
}

CheckResult non_degeneracy(const std::vector<NamedGraph>& corpus,
                           const Options& opt) {
  Recorder rec("non-degeneracy");
  for_each_graph(corpus, rec, [&](const std::string& name, const MultiGraph& g) {
    if (spanning_tree_count(g) > opt.full_enumeration_bound) return;
    const JacobianStructure s = analyze(g);
    const auto table = oracle::enumerate_group(g);
    const auto& el = table.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      bool all_zero = true;
      for (const auto& e : el) all_zero = all_zero && s.pair(el[i], e).is_zero();
      rec.check(all_zero == (i == table.zero_index()), [&] {
        return name + " class " + format_divisor(el[i]) +
               (all_zero ? " pairs to 0 with everything" : " is zero but pairs nontrivially");
      });
    }
  });
  return rec.take();
}

CheckResult inverse_independence(const std::vector<NamedGraph>& corpus,
                                 const Options& opt) {
  Recorder rec("inverse-independence");
  std::mt19937_64 rng(opt.seed + 1);
  for_each_graph(corpus, rec, [&](const std::string& name, const MultiGraph& g) {
    const auto inverses = all_inverses(g);
    std::vector<std::pair<Divisor, Divisor>> pairs;
    if (spanning_tree_count(g) <= opt.full_enumeration_bound) {
      const auto table = oracle::enumerate_group(g);
      for (const auto& a : table.elements())
        for (const auto& b : table.elements())
          pairs.emplace_back(random_lift(g, a, rng, 3), b);
    } else {
      for (std::size_t k = 0; k < opt.pairs_per_graph / 4 + 1; ++k)
        pairs.emplace_back(random_divisor(g.vertex_count(), rng, 4),
                           random_divisor(g.vertex_count(), rng, 4));
    }
    for (const auto& [a, b] : pairs) {
      const PairingValue ref = monodromy_pairing(a, b, inverses.front());
      for (std::size_t k = 1; k < inverses.size(); ++k) {
        const PairingValue v = monodromy_pairing(a, b, inverses[k]);
        rec.check(v == ref, [&] {
          return pair_text(name, a, b) + ": " + inverses.front().describe() +
                 " gives " + ref.to_string() + ", " + inverses[k].describe() +
                 " gives " + v.to_string();
        });
      }
    }
  });
  return rec.take();
}

CheckResult oracle_equivalence(const std::vector<NamedGraph>& corpus,
                               const Options& opt) {
  Recorder rec("oracle-equivalence");
  std::mt19937_64 rng(opt.seed + 2);
  for_each_graph(corpus, rec, [&](const std::string& name, const MultiGraph& g) {
    if (spanning_tree_count(g) > opt.full_enumeration_bound) return;
    const JacobianStructure s = analyze(g);
    const auto table = oracle::enumerate_group(g);
    for (const auto& a : table.elements())
      for (const auto& b : table.elements()) {
        const PairingValue m = s.pair(a, b);
        const PairingValue d = pairing_by_definition(
            s.smith(), random_lift(g, a, rng, 3), random_lift(g, b, rng, 3));
        rec.check(m == d, [&] {
          return pair_text(name, a, b) + ": matrix " + m.to_string() +
                 ", definition " + d.to_string();
        });
      }
  });
  return rec.take();
}

CheckResult order_law(const std::vector<NamedGraph>& corpus,
                      const Options& /*opt*/) {
  Recorder rec("order-law");
  for_each_graph(corpus, rec, [&](const std::string& name, const MultiGraph& g) {
    const JacobianStructure s = analyze(g);
    if (!s.is_cyclic()) return;
    const auto table = oracle::enumerate_group(g);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const Divisor& h = table.elements()[i];
      const Integer den = s.generators().empty()
                              ? Integer(1)
                              : Integer(s.pair(h, s.generators()[0]).denominator());
      rec.check(den == table.order(i) && element_order(s, h) == den, [&] {
        return name + " h=" + format_divisor(h) + ": denominator " +
               den.get_str() + ", brute-force order " +
               std::to_string(table.order(i));
      });
    }
  });
  return rec.take();
}

CheckResult group_order(const std::vector<NamedGraph>& corpus) {
  Recorder rec("group-order");
  auto four_way = [&](const std::string& name, const MultiGraph& g) {
    const JacobianStructure s = analyze(g);
    Integer prod = 1;
    for (const auto& d : s.invariant_factors()) prod *= d;
    const Integer det = spanning_tree_count(g);
    const std::uint64_t trees = oracle::spanning_trees_by_enumeration(g);
    const std::size_t reduced = oracle::enumerate_group(g).size();
    rec.check(prod == det && det == trees && det == reduced, [&] {
      return name + ": snf " + prod.get_str() + ", det " + det.get_str() +
             ", trees " + std::to_string(trees) + ", q-reduced " +
             std::to_string(reduced);
    });
    return det;
  };
  for_each_graph(corpus, rec, four_way);
  for (const auto& [name, n, want] :
       {std::tuple<std::string, std::size_t, unsigned long>{"K4", 4, 16},
        {"K5", 5, 125}}) {
    try {
      const Integer got = four_way(name, families::complete(n));
      rec.check(got == want, [&] {
        return name + ": kappa " + got.get_str() + ", Cayley " +
               std::to_string(want);
      });
    } catch (const std::exception& e) {
      rec.exception(name, e);
    }
  }
  return rec.take();
}

CheckResult dlp_correctness(const Options& opt) {
  Recorder rec("dlp-correctness");
  for (Family f :
       {Family::Cycle, Family::Banana, Family::Wheel, Family::Random}) {
    for (std::size_t i = 0; i < opt.dlp_instances; ++i) {
      const std::uint64_t seed = opt.seed * 1000003 + i;
      const std::size_t size = family_size(f, i);
      const std::string where = std::string(family_name(f)) + " size " +
                                std::to_string(size) + " seed " +
                                std::to_string(seed);
      try {
        const GeneratedInstance gi = generate_instance(f, size, seed);
        const JacobianStructure s = analyze(gi.graph);
        const DlpInstance inst{s, gi.base, gi.target};
        const Integer ord = element_order(s, gi.base);
        for (bool general : {false, true}) {
          const auto sol = general ? dlp_general(inst) : dlp_cyclic(inst);
          rec.check(sol && sol->modulus == ord &&
                        sol->x == mod(gi.secret, ord) &&
                        verify_solution(inst, *sol),
                    [&] {
                      return where + (general ? " (general)" : " (cyclic)") +
                             ": secret " + gi.secret.get_str() + ", got " +
                             (sol ? sol->x.get_str() + " mod " +
                                        sol->modulus.get_str()
                                  : std::string("no solution"));
                    });
        }
      } catch (const std::exception& e) {
        rec.exception(where, e);
      }
    }
  }

  const MultiGraph k4 = families::complete(4);
  const JacobianStructure s = analyze(k4);
  const auto table = oracle::enumerate_group(k4);
  std::mt19937_64 rng(opt.seed + 3);
  for (std::size_t i = 0; i < opt.dlp_instances; ++i) {
    const Divisor d = random_divisor(4, rng, 3);
    try {
      const Integer ord = order_general(s, d);
      const Integer x = static_cast<unsigned long>(rng() % ord.get_ui());
      const Divisor t = class_scale(s, d, x);
      const auto sol = dlp_general({s, d, t});
      const auto brute = oracle::brute_force_dlp(table, d, t);
      rec.check(sol && brute && sol->x == *brute && sol->x == x &&
                    sol->modulus == ord,
                [&] {
                  return "K4 D=" + format_divisor(d) + " x=" + x.get_str() +
                         ": got " +
                         (sol ? sol->x.get_str() : std::string("none")) +
                         ", brute force " +
                         (brute ? std::to_string(*brute) : std::string("none"));
                });
    } catch (const std::exception& e) {
      rec.exception("K4 D=" + format_divisor(d), e);
    }
  }
  return rec.take();
}

CheckResult golden_values() {
  Recorder rec("golden-values");
  try {
    const MultiGraph c3 = families::cycle(3);
    const Divisor g{1, -1, 0};
    const PairingValue v =
        monodromy_pairing(g, g, gen_inverse_minor(c3, 2));
    rec.check(v.to_string() == "2/3",
              [&] { return "C3 <g,g> = " + v.to_string() + ", want 2/3"; });
    for (long m = 2; m <= 6; ++m) {
      const MultiGraph b = families::banana(m);
      const PairingValue p =
          monodromy_pairing(Divisor{1, -1}, Divisor{1, -1}, gen_inverse_minor(b, 1));
      const std::string want = "1/" + std::to_string(m);
      rec.check(p.to_string() == want, [&] {
        return "B" + std::to_string(m) + " <(1,-1),(1,-1)> = " + p.to_string() +
               ", want " + want;
      });
    }
    const JacobianStructure s = analyze(c3);
    const DlpInstance inst{s, g, Integer(2) * g};
    for (bool general : {false, true}) {
      const auto sol = general ? dlp_general(inst) : dlp_cyclic(inst);
      rec.check(sol && *sol == DlpSolution{2, 3}, [&] {
        return std::string("C3 dlp (g, 2g) ") +
               (sol ? sol->x.get_str() + " mod " + sol->modulus.get_str()
                    : "no solution") +
               ", want 2 mod 3";
      });
    }
  } catch (const std::exception& e) {
    rec.exception("golden", e);
  }
  return rec.take();
}

CheckResult lift_independence(const Options& opt) {
  Recorder rec("lift-independence");
  std::mt19937_64 rng(opt.seed + 4);
  const Family fams[] = {Family::Cycle, Family::Wheel, Family::Random,
                         Family::Banana, Family::Complete};
  for (std::size_t i = 0; i < opt.dlp_instances; ++i) {
    const Family f = fams[i % 5];
    // the complete family is K4, solved by the general algorithm
    const std::size_t size = f == Family::Complete ? 4 : 4 + i % 27;
    const std::string where = std::string(family_name(f)) + " trial " +
                              std::to_string(i);
    try {
      const JacobianStructure s = analyze(make_family_graph(f, size, rng));
      const MultiGraph& g = s.graph();
      const Divisor d = random_divisor(g.vertex_count(), rng, 4);
      const Divisor t =
          class_scale(s, d, static_cast<unsigned long>(rng() % 10000));
      auto solve = [&](const Divisor& base, const Divisor& target) {
        const DlpInstance inst{s, base, target};
        return s.is_cyclic() ? dlp_cyclic(inst) : dlp_general(inst);
      };
      const auto ref = solve(d, t);
      const auto lifted =
          solve(random_lift(g, d, rng, 7), random_lift(g, t, rng, 7));
      rec.check(ref && lifted && *ref == *lifted, [&] {
        return where + ": original " +
               (ref ? ref->x.get_str() + " mod " + ref->modulus.get_str()
                    : std::string("none")) +
               ", lifted " +
               (lifted ? lifted->x.get_str() + " mod " + lifted->modulus.get_str()
                       : std::string("none"));
      });
    } catch (const std::exception& e) {
      rec.exception(where, e);
    }
  }
  return rec.take();
}

std::vector<CheckResult> run_all(const std::vector<NamedGraph>& corpus,
                                 const Options& opt) {
  return {pairing_axioms(corpus, opt),  non_degeneracy(corpus, opt),
          inverse_independence(corpus, opt), oracle_equivalence(corpus, opt),
          order_law(corpus, opt),       group_order(corpus),
          dlp_correctness(opt),         golden_values(),
          lift_independence(opt)};
}

}  // namespace graphjac::selfcheck

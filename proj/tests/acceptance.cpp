// Acceptance sweeps. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rook/rook.hpp"

using namespace rook;

namespace {

  struct Tally {
    long        cases    = 0;
    long        failures = 0;
    std::string first_failure;

    void expect(bool ok, std::string const& what = "") {
      ++cases;
      if (!ok && failures++ == 0) {
        first_failure = what;
      }
    }
  };

  int failed_criteria = 0;

  void criterion(int id, char const* title, double limit_seconds,
                 std::function<void(Tally&)> const& body) {
    Tally      t;
    auto const start = std::chrono::steady_clock::now();
    try {
      body(t);
    } catch (std::exception const& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    bool const in_time = limit_seconds <= 0 || secs < limit_seconds;
    bool const ok      = t.failures == 0 && in_time;
    failed_criteria += !ok;
    std::printf("%s %2d  %-34s %9ld cases  %ld failures  %.2fs", ok ? "PASS" : "FAIL",
                id, title, t.cases, t.failures, secs);
    if (limit_seconds > 0) {
      std::printf(" (limit %.0fs)", limit_seconds);
    }
    if (!t.first_failure.empty()) {
      std::printf("  first failure: %s", t.first_failure.c_str());
    }
    std::printf("\n");
  }

  oracle::Set as_set(Subset const& s) {
    return s.elements();
  }

  oracle::Map as_map(PartialMap const& f) {
    return oracle::Map(f.pairs().begin(), f.pairs().end());
  }

  oracle::Vec as_vec(ModuleVector const& v) {
    oracle::Vec out;
    for (auto const& [s, c] : v.terms()) {
      out[as_set(s)] = c;
    }
    return out;
  }

  std::vector<Subset> every_subset(int n) {
    std::vector<Subset> out;
    for (int k = 0; k <= n; ++k) {
      auto part = subsets_of_size(n, k);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  // Down-closed families of subsets of {1..n}: each is the basis of a
  // submodule. `pool` lists comparable sets in increasing order.
  void for_each_submodule(int n, std::function<void(SubsetFamily const&)> const& visit) {
    auto const                       pool = every_subset(n);
    std::vector<oracle::Set>         pool_sets;
    for (auto const& s : pool) {
      pool_sets.push_back(as_set(s));
    }
    std::vector<bool>                chosen(pool.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == pool.size()) {
        SubsetFamily family;
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (chosen[j]) {
            family.push_back(pool[j]);
          }
        }
        std::sort(family.begin(), family.end());
        visit(family);
        return;
      }
      rec(i + 1);
      for (std::size_t j = 0; j < i; ++j) {
        if (!chosen[j] && oracle::below(pool_sets[j], pool_sets[i])) {
          return;
        }
      }
      chosen[i] = true;
      rec(i + 1);
      chosen[i] = false;
    };
    rec(0);
  }

  oracle::Map oracle_eval(Word const& w) {
    auto out = oracle::identity(w.n);
    for (auto const& g : w.symbols) {
      if (g.kind == GeneratorSymbol::Kind::L) {
        out = oracle::compose(out, oracle::gen_l(w.n, g.index));
      } else if (g.kind == GeneratorSymbol::Kind::E) {
        out = oracle::compose(out, oracle::gen_e(w.n, g.index));
      }
    }
    return out;
  }

  std::vector<GeneratorSymbol> symbols_of(int n) {
    std::vector<GeneratorSymbol> out = {GeneratorSymbol::one()};
    for (int i = 1; i < n; ++i) {
      out.push_back(GeneratorSymbol::l(i));
    }
    for (int j = 1; j <= n; ++j) {
      out.push_back(GeneratorSymbol::e(j));
    }
    return out;
  }

  // Number of instances per relation family at n, counted directly.
  std::vector<long> expected_instances(int n) {
    long const l = std::max(n - 1, 0);
    long c5 = 0, c6 = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        c5 += i != j && i != j + 1;
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        c6 += std::abs(i - j) >= 2;
      }
    }
    return {n, std::max(n - 2, 0), l, l, c5, c6, long(n) * n};
  }

}  // namespace

int main() {
  criterion(1, "order triple-agreement", 30, [](Tally& t) {
    for (int n = 0; n <= 11; ++n) {
      auto const expected = oracle::catalan(n + 1);
      auto const listed   = enumerate_Bn(n).size();
      t.expect(listed == expected && order_Bn(n) == expected
                   && order_recursive(n) == expected,
               "n = " + std::to_string(n));
      if (n <= 7) {
        t.expect(oracle::monoid(n).size() == listed,
                 "brute force n = " + std::to_string(n));
      }
    }
  });

  criterion(2, "ballot bijection", 0, [](Tally& t) {
    for (int n = 0; n <= 8; ++n) {
      std::set<std::string> seen;
      for_each_Bn(n, [&](PartialMap const& f) {
        auto b   = ballot_encode(f);
        int  sum = 0, ups = 0;
        bool prefix_ok = true;
        for (auto s : b.steps()) {
          sum += s;
          ups += s == 1;
          prefix_ok = prefix_ok && sum >= 0;
        }
        t.expect(prefix_ok && sum == 0 && ups == n + 1
                     && b.steps().size() == std::size_t(2 * n + 2),
                 "invariant " + print_element(f));
        t.expect(ballot_decode(b) == f, "round trip " + print_element(f));
        seen.insert(b.str());
      });
      t.expect(seen.size() == oracle::catalan(n + 1),
               "distinct images n = " + std::to_string(n));
    }
  });

  criterion(3, "echelon count", 0, [](Tally& t) {
    for (int n = 0; n <= 6; ++n) {
      t.expect(count_echelon(n) == oracle::catalan(n + 1),
               "echelon n = " + std::to_string(n));
      t.expect(count_planar(n) == oracle::choose(2 * n, n),
               "planar n = " + std::to_string(n));
      t.expect(order_PRn(n) == oracle::choose(2 * n, n));
    }
  });

  criterion(4, "dimension formula vs oracle", 10, [](Tally& t) {
    int const n = 10;
    for (Subset::mask_type m = 1; m <= Subset::full_mask(n); ++m) {
      auto s     = Subset::from_mask(n, m);
      auto brute = oracle::down_set_size(n, as_set(s));
      t.expect(dim_single(s) == brute && dim_oracle(s) == brute
                   && down_set(s).size() == brute,
               to_string(s));
    }
  });

  criterion(5, "special dimensions", 0, [](Tally& t) {
    for (int n = 1; n <= 16; ++n) {
      for (int k = 1; k <= n; ++k) {
        int const m = n - k;
        t.expect(dim_single(Subset::interval(n, m + 1, m + k))
                     == oracle::choose(m + k, k),
                 "consecutive m = " + std::to_string(m)
                     + ", k = " + std::to_string(k));
      }
    }
    for (int k = 1; k <= 8; ++k) {
      Subset s(2 * k);
      for (int i = 1; i <= k; ++i) {
        s.insert(2 * i);
      }
      t.expect(dim_single(s) == oracle::catalan(k + 1),
               "even k = " + std::to_string(k));
    }
    for (int k = 2; k <= 8; ++k) {
      for (int m = 2; m <= k; ++m) {
        oracle::Set s;
        for (int i = 1; i <= m; ++i) {
          s.push_back(2 * i);
        }
        for (int x = 2 * m + 1; x <= m + k; ++x) {
          s.push_back(x);
        }
        t.expect(dim_mixed(k, m) == oracle::down_set_size(m + k, s),
                 "mixed k = " + std::to_string(k) + ", m = " + std::to_string(m));
      }
    }
  });

  criterion(6, "inclusion-exclusion", 0, [](Tally& t) {
    std::mt19937_64                                  rng(6);
    std::uniform_int_distribution<int>               degree(1, 7);
    std::uniform_int_distribution<int>               terms(1, 5);
    std::uniform_int_distribution<int>               coeff(-4, 4);
    std::vector<std::vector<oracle::Map>>            monoids;
    for (int n = 0; n <= 7; ++n) {
      monoids.push_back(oracle::monoid(n));
    }
    for (int i = 0; i < 1000; ++i) {
      int const                                        n = degree(rng);
      std::uniform_int_distribution<Subset::mask_type> mask(0, Subset::full_mask(n));
      ModuleVector                                     v(n);
      for (int j = terms(rng); j > 0; --j) {
        v.add(Subset::from_mask(n, mask(rng)), coeff(rng));
      }
      auto const d     = dim_cyclic(v);
      auto const space = oracle::cyclic_module(monoids[n], as_vec(v));
      t.expect(d == cyclic_span(v).size() && d == space.rank(),
               format_vector(v));
    }
  });

  criterion(7, "reduced generators", 0, [](Tally& t) {
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 4; ++n) {
      auto const monoid = oracle::monoid(n);
      for_each_submodule(n, [&](SubsetFamily const& basis) {
        auto g = reduced_generator_of_span(n, basis);
        std::set<oracle::Set> expected;
        for (auto const& s : basis) {
          expected.insert(as_set(s));
        }
        std::set<oracle::Set> regenerated;
        for (auto const& [s, c] : g.terms()) {
          oracle::Set img;
          for (auto const& f : monoid) {
            if (oracle::image(f, as_set(s), img)) {
              regenerated.insert(img);
            }
          }
          t.expect(c == 1);
        }
        t.expect(regenerated == expected, "regenerate");
        // other generators of the same submodule
        for (int trial = 0; trial < 4; ++trial) {
          ModuleVector h(n);
          for (auto const& s : basis) {
            if (rng() % 3 == 0) {
              h.add(s, int(rng() % 7) - 3);
            }
          }
          for (auto const& [s, c] : g.terms()) {
            h.add(s, int(rng() % 3) + 1);
          }
          auto space = oracle::cyclic_module(monoid, as_vec(h));
          if (space.rank() == basis.size()) {
            t.expect(reduced_form(h) == g, "unique " + format_vector(h));
          }
        }
      });
    }
  });

  criterion(8, "structure theorems", 0, [](Tally& t) {
    for (int n = 0; n <= 5; ++n) {
      for_each_submodule(n, [&](SubsetFamily const& basis) {
        if (basis.empty()) {
          return;
        }
        std::vector<oracle::Set> sets;
        for (auto const& s : basis) {
          sets.push_back(as_set(s));
        }
        auto g = reduced_generator_of_span(n, basis);
        bool connected = oracle::comparability_connected(sets);
        t.expect(is_indecomposable(g) == connected, "indecomposable");
        bool single = std::all_of(sets.begin(), sets.end(), [&](auto& s) {
          return s.size() == sets.front().size();
        });
        if (single) {
          int const   k = int(sets.front().size());
          oracle::Set first_k;
          for (int i = 1; i <= k; ++i) {
            first_k.push_back(i);
          }
          auto socle = minimal_irreducible(k, n);
          t.expect(socle.support() == std::vector{Subset(n, std::span<int const>(first_k))}
                       && std::find(sets.begin(), sets.end(), first_k) != sets.end(),
                   "socle");
        }
      });
    }
  });

  criterion(9, "branching", 0, [](Tally& t) {
    for (int k = 2; k <= 5; ++k) {
      for (int l = 1; l < k; ++l) {
        for (int m = 1; m <= 3; ++m) {
          auto p = branch_predict(m, k, l);
          auto c = branch_compute(m, k, l);
          t.expect(p == c, "m = " + std::to_string(m) + ", k = "
                               + std::to_string(k) + ", l = " + std::to_string(l));
          oracle::Big total = 0;
          for (auto const& s : c) {
            total += s.multiplicity * s.dimension;
            t.expect(s.dimension == oracle::choose(s.m + s.k, s.k));
          }
          t.expect(total == oracle::choose(m + k, k));
        }
      }
    }
    for (int k = 2; k <= 5; ++k) {
      auto e = branch_even(k);
      t.expect(e == branch_even_compute(k), "even k = " + std::to_string(k));
      oracle::Big total = 0;
      for (auto const& s : e) {
        total += s.multiplicity * s.dimension;
      }
      t.expect(total == oracle::catalan(k + 1));
    }
  });

  criterion(10, "identities", 0, [](Tally& t) {
    for (int k = 2; k <= 15; ++k) {
      t.expect(catalan_identity(k) == oracle::catalan(k + 1),
               "catalan k = " + std::to_string(k));
    }
    for (int m = 0; m <= 12; ++m) {
      for (int k = 0; k <= 12; ++k) {
        for (int l = 0; l <= k; ++l) {
          BigInt sum = 0;
          for (int a = 0; a <= k - l; ++a) {
            sum += binomial(k - l, a) * binomial(m + l, k - a);
          }
          t.expect(sum == oracle::choose(m + k, k));
        }
      }
    }
    for (int k = 2; k <= 10; ++k) {
      t.expect(oracle::catalan(k + 1)
                   == 2 * oracle::catalan(k) + dim_mixed(k, k - 2),
               "doubling k = " + std::to_string(k));
    }
  });

  criterion(11, "presentation", 60, [](Tally& t) {
    for (int n = 1; n <= 8; ++n) {
      auto const report   = check_relations(n);
      auto const expected = expected_instances(n);
      for (auto const& row : report) {
        t.expect(row.failures == 0 && row.instances == expected[row.family - 1],
                 "relation " + std::to_string(row.family) + " at n = "
                     + std::to_string(n));
      }
      for (auto const& inst : relation_instances(n)) {
        for (auto const& side : inst.sides) {
          t.expect(oracle_eval(side) == oracle_eval(inst.sides.front()));
        }
      }
    }
    std::mt19937_64                    rng(11);
    std::uniform_int_distribution<int> degree(1, 6);
    std::uniform_int_distribution<int> length(0, 25);
    for (int i = 0; i < 10000; ++i) {
      int const                          n   = degree(rng);
      auto const                         all = symbols_of(n);
      std::uniform_int_distribution<int> pick(0, int(all.size()) - 1);
      Word                               w{n, {}};
      for (int j = length(rng); j > 0; --j) {
        w.symbols.push_back(all[pick(rng)]);
      }
      auto const r = rewrite(w);
      t.expect(r == element_to_std(eval_word(w))
                   && as_map(std_to_element(r)) == oracle_eval(w),
               to_string(w));
    }
    auto const                      all = symbols_of(4);
    std::function<void(Word&, int)> rec = [&](Word& w, int left) {
      auto const r = rewrite(w);
      t.expect(r == element_to_std(eval_word(w))
                   && as_map(std_to_element(r)) == oracle_eval(w),
               to_string(w));
      if (left > 0) {
        for (auto const& g : all) {
          w.symbols.push_back(g);
          rec(w, left - 1);
          w.symbols.pop_back();
        }
      }
    };
    Word w{4, {}};
    rec(w, 4);
  });

  criterion(12, "standard-word bijection", 0, [](Tally& t) {
    for (int n = 0; n <= 10; ++n) {
      t.expect(standard_words(n).size() == oracle::catalan(n + 1),
               "count n = " + std::to_string(n));
    }
    for_each_Bn(8, [&](PartialMap const& f) {
      auto const w = element_to_std(f);
      t.expect(std_to_element(w) == f && w.S() == f.domain() && w.T() == f.range(),
               print_element(f));
    });
  });

  std::printf("%s\n", failed_criteria == 0 ? "all criteria passed"
                                           : "some criteria failed");
  return failed_criteria == 0 ? 0 : 1;
}

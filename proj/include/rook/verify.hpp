#ifndef ROOK_VERIFY_HPP_
#define ROOK_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "enumeration.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "module.hpp"
#include "partial_map.hpp"
#include "presentation.hpp"
#include "subset.hpp"

// Self-checking sweeps over the library: each row compares two computations
// of the same quantity over a range of parameters and counts disagreements.

namespace rook {

  struct CheckResult {
    std::string  suite;
    std::string  name;
    std::int64_t cases    = 0;
    std::int64_t failures = 0;
    double       seconds  = 0;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! `nmax` and `kmax` override the default bound of the suites that use
  //! them; `small` selects reduced defaults for a quick run.
  struct VerifyOptions {
    bool               small = false;
    std::optional<int> nmax;
    std::optional<int> kmax;
    std::uint64_t      seed = 20240601;
  };

  inline std::vector<std::string_view> const& verify_suites() {
    static std::vector<std::string_view> const suites
        = {"orders", "dims", "identities", "branching", "relations"};
    return suites;
  }

  namespace detail {
    class Tally {
     public:
      explicit Tally(CheckResult& r) : _r(r) {}

      void operator()(bool ok) const {
        add(1, ok ? 0 : 1);
      }

      void add(std::int64_t cases, std::int64_t failures) const {
        _r.cases += cases;
        _r.failures += failures;
      }

     private:
      CheckResult& _r;
    };

    class Checker {
     public:
      Checker(std::string suite, std::vector<CheckResult>& out)
          : _suite(std::move(suite)), _out(out) {}

      //! body(expect) is run once; expect(bool) records a single case. An
      //! escaping exception counts as one more failure.
      template <typename Body>
      void run(std::string name, Body&& body) {
        CheckResult r{_suite, std::move(name)};
        auto const  start = std::chrono::steady_clock::now();
        try {
          body(Tally(r));
        } catch (std::exception const&) {
          ++r.failures;
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        _out.push_back(std::move(r));
      }

     private:
      std::string               _suite;
      std::vector<CheckResult>& _out;
    };

    inline int bound(std::optional<int> given, bool small, int full, int quick) {
      return given ? *given : (small ? quick : full);
    }

    //! Every subset of {1..n}, smaller cardinalities first. Comparable sets
    //! always appear in increasing order.
    inline std::vector<Subset> all_subsets(int n) {
      std::vector<Subset> out;
      for (int k = 0; k <= n; ++k) {
        auto part = subsets_of_size(n, k);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }

    //! Calls visit(family) for every down-closed family drawn from `pool`,
    //! which must list comparable sets in increasing order.
    template <typename Visitor>
    void for_each_down_closed(std::vector<Subset> const& pool,
                              Visitor&&                  visit) {
      std::set<Subset>                 current;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pool.size()) {
          visit(SubsetFamily(current.begin(), current.end()));
          return;
        }
        rec(i + 1);
        for (auto const& t : lower_covers(pool[i])) {
          if (current.count(t) == 0) {
            return;
          }
        }
        current.insert(pool[i]);
        rec(i + 1);
        current.erase(pool[i]);
      };
      rec(0);
    }

    inline ModuleVector random_vector(std::mt19937_64& rng, int n) {
      std::uniform_int_distribution<int>               terms(1, 5);
      std::uniform_int_distribution<Subset::mask_type> mask(
          0, Subset::full_mask(n));
      std::uniform_int_distribution<int> coeff(1, 4);
      ModuleVector                       v(n);
      for (int t = terms(rng); t > 0; --t) {
        v.add(Subset::from_mask(n, mask(rng)), coeff(rng));
      }
      return v;
    }

    inline Word random_word(std::mt19937_64& rng, int n, int max_length) {
      std::uniform_int_distribution<int> length(0, max_length);
      std::uniform_int_distribution<int> kind(0, 2 * n - 1);
      Word                               w{n, {}};
      for (int i = length(rng); i > 0; --i) {
        int x = kind(rng);
        if (x == 0) {
          w.symbols.push_back(GeneratorSymbol::one());
        } else if (x < n) {
          w.symbols.push_back(GeneratorSymbol::l(x));
        } else {
          w.symbols.push_back(GeneratorSymbol::e(x - n + 1));
        }
      }
      return w;
    }

    inline std::vector<GeneratorSymbol> all_symbols(int n) {
      std::vector<GeneratorSymbol> out = {GeneratorSymbol::one()};
      for (int i = 1; i < n; ++i) {
        out.push_back(GeneratorSymbol::l(i));
      }
      for (int j = 1; j <= n; ++j) {
        out.push_back(GeneratorSymbol::e(j));
      }
      return out;
    }

    inline void verify_orders(VerifyOptions const& o,
                              std::vector<CheckResult>& out) {
      Checker   c("orders", out);
      int const nmax = bound(o.nmax, o.small, 11, 8);
      c.run("enumeration = catalan = recursion", [&](auto expect) {
        for (int n = 0; n <= nmax; ++n) {
          BigInt count = 0;
          for_each_Bn(n, [&count](PartialMap const&) { ++count; });
          expect(count == catalan(n + 1) && count == order_recursive(n));
        }
      });
      c.run("ballot round trip", [&](auto expect) {
        for (int n = 0; n <= std::min(nmax, 8); ++n) {
          std::set<std::string> seen;
          for_each_Bn(n, [&](PartialMap const& f) {
            auto b = ballot_encode(f);
            expect(ballot_decode(b) == f && seen.insert(b.str()).second);
          });
        }
      });
      c.run("echelon counts", [&](auto expect) {
        for (int n = 0; n <= std::min(nmax, 6); ++n) {
          expect(count_echelon(n) == catalan(n + 1));
          expect(count_planar(n) == order_PRn(n));
        }
      });
      c.run("standard words", [&](auto expect) {
        for (int n = 0; n <= std::min(nmax, 10); ++n) {
          expect(BigInt(standard_words(n).size()) == catalan(n + 1));
        }
        for_each_Bn(std::min(nmax, 8), [&](PartialMap const& f) {
          expect(std_to_element(element_to_std(f)) == f);
        });
      });
    }

    inline void verify_dims(VerifyOptions const& o,
                            std::vector<CheckResult>& out) {
      Checker   c("dims", out);
      int const nmax = bound(o.nmax, o.small, 10, 8);
      c.run("closed recursion = oracle = down-set", [&](auto expect) {
        for (Subset::mask_type m = 1; m <= Subset::full_mask(nmax); ++m) {
          auto s = Subset::from_mask(nmax, m);
          auto d = dim_single(s);
          expect(d == dim_oracle(s) && d == BigInt(down_set(s).size()));
        }
      });
      c.run("consecutive and even subsets", [&](auto expect) {
        for (int n = 1; n <= (o.small ? 12 : 16); ++n) {
          for (int k = 1; k <= n; ++k) {
            expect(dim_single(Subset::terminal(n, k)) == binomial(n, k));
          }
        }
        for (int k = 1; k <= 8; ++k) {
          expect(dim_single(mixed_subset(k, k)) == catalan(k + 1));
        }
      });
      c.run("mixed subsets", [&](auto expect) {
        for (int k = 0; k <= 8; ++k) {
          for (int m = 0; m <= k; ++m) {
            expect(dim_mixed(k, m) == dim_oracle(mixed_subset(k, m)));
          }
        }
      });
      c.run("inclusion-exclusion", [&](auto expect) {
        std::mt19937_64                    rng(o.seed);
        std::uniform_int_distribution<int> degree(1, 7);
        for (int i = 0; i < (o.small ? 200 : 1000); ++i) {
          auto v = random_vector(rng, degree(rng));
          expect(dim_cyclic(v) == BigInt(cyclic_span(v).size()));
        }
      });
      c.run("reduced generators", [&](auto expect) {
        for (int n = 0; n <= 4; ++n) {
          for_each_down_closed(all_subsets(n), [&](SubsetFamily const& b) {
            auto g = reduced_generator_of_span(n, b);
            expect(cyclic_span(g) == b && reduced_form(g) == g);
            ModuleVector h = 2 * g;
            for (auto const& s : b) {
              h.add(s, 3);
            }
            expect(cyclic_span(h) == b && reduced_form(h) == g);
          });
        }
      });
      c.run("indecomposables and the socle", [&](auto expect) {
        for (int n = 0; n <= (o.small ? 4 : 5); ++n) {
          for_each_down_closed(all_subsets(n), [&](SubsetFamily const& b) {
            if (b.empty()) {
              return;
            }
            auto g      = reduced_generator_of_span(n, b);
            bool single = std::all_of(b.begin(), b.end(), [&b](auto& s) {
              return s.size() == b.front().size();
            });
            expect(is_indecomposable(g) == single);
            BigInt total = 0;
            for (auto const& part : decompose(g)) {
              total += cyclic_span(part).size();
            }
            expect(total == BigInt(b.size()));
            if (single) {
              auto socle = minimal_irreducible(b.front().size(), n);
              expect(cyclic_span(socle).size() == 1
                     && std::binary_search(
                         b.begin(), b.end(), socle.support().front()));
            }
          });
        }
      });
    }

    inline void verify_identities(VerifyOptions const& o,
                                  std::vector<CheckResult>& out) {
      Checker   c("identities", out);
      int const kmax = bound(o.kmax, o.small, 15, 10);
      c.run("catalan from even subsets", [&](auto expect) {
        for (int k = 2; k <= kmax; ++k) {
          expect(catalan_identity(k) == catalan(k + 1));
        }
      });
      c.run("branching dimensions", [&](auto expect) {
        int const top = std::min(kmax, 12);
        for (int m = 0; m <= top; ++m) {
          for (int k = 0; k <= top; ++k) {
            for (int l = 0; l <= k; ++l) {
              BigInt sum = 0;
              for (int a = 0; a <= k - l; ++a) {
                sum += binomial(k - l, a) * binomial(m + l, k - a);
              }
              expect(sum == binomial(m + k, k));
            }
          }
        }
      });
      c.run("catalan doubling", [&](auto expect) {
        for (int k = 2; k <= std::min(kmax, 10); ++k) {
          expect(catalan(k + 1) == 2 * catalan(k) + dim_mixed(k, k - 2));
        }
      });
    }

    inline void verify_branching(VerifyOptions const& o,
                                 std::vector<CheckResult>& out) {
      Checker   c("branching", out);
      int const kmax = bound(o.kmax, o.small, 5, 4);
      c.run("consecutive restriction", [&](auto expect) {
        for (int k = 2; k <= kmax; ++k) {
          for (int l = 1; l < k; ++l) {
            for (int m = 1; m <= 3; ++m) {
              auto p     = branch_predict(m, k, l);
              BigInt sum = 0;
              for (auto const& s : p) {
                sum += s.multiplicity * s.dimension;
              }
              expect(p == branch_compute(m, k, l) && sum == binomial(m + k, k));
            }
          }
        }
      });
      c.run("even restriction", [&](auto expect) {
        for (int k = 2; k <= kmax; ++k) {
          expect(branch_even(k) == branch_even_compute(k));
        }
      });
    }

    inline void verify_relations(VerifyOptions const& o,
                                 std::vector<CheckResult>& out) {
      Checker   c("relations", out);
      int const nmax = bound(o.nmax, o.small, 8, 6);
      c.run("defining relations", [&](auto expect) {
        for (int n = 1; n <= nmax; ++n) {
          for (auto const& row : check_relations(n)) {
            expect.add(row.instances, row.failures);
          }
        }
      });
      c.run("rewriting, random words", [&](auto expect) {
        std::mt19937_64                    rng(o.seed);
        std::uniform_int_distribution<int> degree(1, 6);
        for (int i = 0; i < (o.small ? 1000 : 10000); ++i) {
          auto w = random_word(rng, degree(rng), 25);
          expect(rewrite(w) == element_to_std(eval_word(w)));
        }
      });
      c.run("rewriting, short words", [&](auto expect) {
        int const  n       = 4;
        auto const symbols = all_symbols(n);
        std::function<void(Word&, int)> rec = [&](Word& w, int left) {
          expect(rewrite(w) == element_to_std(eval_word(w)));
          if (left == 0) {
            return;
          }
          for (auto const& g : symbols) {
            w.symbols.push_back(g);
            rec(w, left - 1);
            w.symbols.pop_back();
          }
        };
        Word w{n, {}};
        rec(w, 4);
      });
      c.run("multiplication tables", [&](auto expect) {
        for (int n = 1; n <= 4; ++n) {
          for (auto const& w : standard_words(n)) {
            auto const f = std_to_element(w);
            for (auto const& g : all_symbols(n)) {
              auto const x = concrete_generator(g, n);
              expect(std_to_element(mul_std_right(w, g)) == compose(f, x));
              expect(std_to_element(mul_std_left(g, w)) == compose(x, f));
            }
          }
        }
      });
    }
  }  // namespace detail

  //! Runs one suite, or every suite for "all". Throws InvalidRange for an
  //! unknown suite name.
  inline std::vector<CheckResult> verify(std::string_view     suite,
                                         VerifyOptions const& options = {}) {
    using Runner = void (*)(VerifyOptions const&, std::vector<CheckResult>&);
    static Runner const runners[] = {detail::verify_orders,
                                     detail::verify_dims,
                                     detail::verify_identities,
                                     detail::verify_branching,
                                     detail::verify_relations};
    std::vector<CheckResult> out;
    bool                     found = false;
    for (std::size_t i = 0; i < verify_suites().size(); ++i) {
      if (suite == "all" || suite == verify_suites()[i]) {
        runners[i](options, out);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::invalid_range,
                  "unknown suite '" + std::string(suite) + "'");
    }
    return out;
  }

}  // namespace rook

#endif  // ROOK_VERIFY_HPP_

#ifndef ROOK_MODULE_HPP_
#define ROOK_MODULE_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "partial_map.hpp"
#include "subset.hpp"

// The module V with basis v_S, S a subset of {1, ..., n}, on which B_n acts
// by f . v_S = v_{f(S)} if S is contained in D(f) and 0 otherwise.

namespace rook {

  //! A finitely supported combination of basis vectors v_S with exact
  //! rational coefficients. Zero coefficients are never stored.
  class ModuleVector {
   public:
    using Terms = std::map<Subset, Rational>;

    explicit ModuleVector(int n = 0) : _n(n) {
      validate_degree(n);
    }

    //! The basis vector v_S.
    static ModuleVector basis(Subset const& s) {
      ModuleVector v(s.degree());
      v.add(s, 1);
      return v;
    }

    int degree() const noexcept {
      return _n;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Rational coefficient(Subset const& s) const {
      auto it = _terms.find(s);
      return it == _terms.end() ? Rational(0) : it->second;
    }

    //! supp(v), in canonical order.
    std::vector<Subset> support() const {
      std::vector<Subset> out;
      for (auto const& [s, c] : _terms) {
        out.push_back(s);
      }
      return out;
    }

    ModuleVector& add(Subset const& s, Rational const& c) {
      if (s.degree() != _n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "subset " + to_string(s) + " of degree "
                        + std::to_string(s.degree()) + " added to a vector of "
                        + "degree " + std::to_string(_n));
      }
      if (c == 0) {
        return *this;
      }
      auto [it, inserted] = _terms.emplace(s, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
      return *this;
    }

    ModuleVector& operator+=(ModuleVector const& other) {
      check_degree(other);
      for (auto const& [s, c] : other._terms) {
        add(s, c);
      }
      return *this;
    }

    ModuleVector& operator*=(Rational const& c) {
      if (c == 0) {
        _terms.clear();
      } else {
        for (auto& term : _terms) {
          term.second *= c;
        }
      }
      return *this;
    }

    friend ModuleVector operator+(ModuleVector a, ModuleVector const& b) {
      return a += b;
    }

    friend ModuleVector operator*(Rational const& c, ModuleVector v) {
      return v *= c;
    }

    bool operator==(ModuleVector const&) const = default;

   private:
    void check_degree(ModuleVector const& other) const {
      if (other._n != _n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "vectors of degree " + std::to_string(_n) + " and "
                        + std::to_string(other._n));
      }
    }

    int   _n;
    Terms _terms;
  };

  //! Sorted, duplicate free list of subsets; the basis {v_S} of a submodule.
  using SubsetFamily = std::vector<Subset>;

  //! f . v, extended linearly.
  inline ModuleVector act(PartialMap const& f, ModuleVector const& v) {
    if (f.degree() != v.degree()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "map of degree " + std::to_string(f.degree())
                      + " acting on a vector of degree "
                      + std::to_string(v.degree()));
    }
    ModuleVector out(v.degree());
    Subset const domain = f.domain();
    for (auto const& [s, c] : v.terms()) {
      if (!s.is_subset_of(domain)) {
        continue;
      }
      Subset image(v.degree());
      for (int x : s.elements()) {
        image.insert(*f(x));
      }
      out.add(image, c);
    }
    return out;
  }

  //! Basis of B_n v: the union of the down-sets of the support.
  inline SubsetFamily cyclic_span(ModuleVector const& v) {
    std::set<Subset> out;
    for (auto const& [s, c] : v.terms()) {
      auto ds = down_set(s);
      out.insert(ds.begin(), ds.end());
    }
    return SubsetFamily(out.begin(), out.end());
  }

  //! Maximal elements of a family of subsets under the componentwise order.
  //! The result is an antichain, in canonical order.
  inline SubsetFamily maximal_elements(SubsetFamily const& family) {
    SubsetFamily out;
    for (auto const& s : family) {
      bool dominated = std::any_of(
          family.begin(), family.end(), [&s](Subset const& t) {
            return t != s && subset_leq(s, t);
          });
      if (!dominated) {
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  //! Red(v), the maximal elements of supp(v). Empty for v = 0.
  struct ReducedSupport {
    int          degree = 0;
    SubsetFamily sets;

    bool operator==(ReducedSupport const&) const = default;
  };

  inline ReducedSupport reduced_support(ModuleVector const& v) {
    return {v.degree(), maximal_elements(v.support())};
  }

  //! The sum of v_S over S in Red(v); generates the same submodule as v.
  inline ModuleVector reduced_form(ModuleVector const& v) {
    ModuleVector out(v.degree());
    for (auto const& s : reduced_support(v).sets) {
      out.add(s, 1);
    }
    return out;
  }

  //! True if every lower cover of every member is again a member.
  inline bool is_down_closed(SubsetFamily const& family) {
    std::set<Subset> members(family.begin(), family.end());
    for (auto const& s : family) {
      for (auto const& t : lower_covers(s)) {
        if (members.count(t) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  //! The unique reduced generator of the submodule with basis {v_S : S in
  //! basis}. Throws NotDownClosed if the family is not the basis of a
  //! submodule.
  inline ModuleVector reduced_generator_of_span(int                 n,
                                                SubsetFamily const& basis) {
    validate_degree(n);
    for (auto const& s : basis) {
      if (s.degree() != n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "basis subset " + to_string(s) + " is not of degree "
                        + std::to_string(n));
      }
    }
    if (!is_down_closed(basis)) {
      throw Error(ErrorCode::not_down_closed,
                  "family is not closed under the componentwise order");
    }
    ModuleVector out(n);
    for (auto const& s : maximal_elements(basis)) {
      out.add(s, 1);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dimensions
  ////////////////////////////////////////////////////////////////////////

  //! Data of the closed recursion for d_k = dim B_n v_S, S = {s_1 < ... <
  //! s_k}: the partition lambda_i = s_{k-i+1} - (k - i + 1) and the
  //! coefficients gamma_1 = 1,
  //!
  //!   gamma_j = - sum_{i=1}^{j-2} C(s_{k+1-i} - s_{k+2-j}, j - i) gamma_i
  //!
  //! for 2 <= j <= k - 1. Then d_1 = s_1 and, for k >= 2,
  //!
  //!   d_k =   sum_{i=1}^{k-1} C(s_{k-i+1}, k+1-i) gamma_i
  //!         - sum_{i=1}^{k-1} C(s_{k-i+1} - s_1, k+1-i) gamma_i
  //!         - sum_{i=1}^{k-2} s_1 C(s_{k-i+1} - s_2, k-i) gamma_i.
  struct DimRecursion {
    Subset              set;
    std::vector<int>    lambda;  // lambda[i - 1] = lambda_i
    std::vector<BigInt> gamma;   // gamma[j - 1] = gamma_j
    BigInt              dimension;
  };

  inline DimRecursion dim_recursion(Subset const& set) {
    DimRecursion r{set, {}, {}, 1};
    auto const   e = set.elements();
    int const    k = static_cast<int>(e.size());
    auto s = [&e](int j) -> std::int64_t {
      return e[j - 1];
    };
    for (int i = 1; i <= k; ++i) {
      r.lambda.push_back(static_cast<int>(s(k - i + 1) - (k - i + 1)));
    }
    if (k == 0) {
      return r;
    }
    r.gamma.push_back(1);
    if (k == 1) {
      r.dimension = s(1);
      return r;
    }
    for (int j = 2; j <= k - 1; ++j) {
      BigInt g = 0;
      for (int i = 1; i <= j - 2; ++i) {
        g -= binomial(s(k + 1 - i) - s(k + 2 - j), j - i) * r.gamma[i - 1];
      }
      r.gamma.push_back(g);
    }
    BigInt d = 0;
    for (int i = 1; i <= k - 1; ++i) {
      d += binomial(s(k - i + 1), k + 1 - i) * r.gamma[i - 1];
      d -= binomial(s(k - i + 1) - s(1), k + 1 - i) * r.gamma[i - 1];
    }
    for (int i = 1; i <= k - 2; ++i) {
      d -= s(1) * binomial(s(k - i + 1) - s(2), k - i) * r.gamma[i - 1];
    }
    r.dimension = d;
    return r;
  }

  //! dim B_n v_S by the closed recursion; 1 for S empty.
  inline BigInt dim_single(Subset const& set) {
    return dim_recursion(set).dimension;
  }

  //! dim B_n v_S as the number of sequences mu_1 >= ... >= mu_k >= 0 with
  //! mu_i <= lambda_i, counted by dynamic programming over i.
  inline BigInt dim_oracle(Subset const& set) {
    auto const e = set.elements();
    int const  k = static_cast<int>(e.size());
    if (k == 0) {
      return 1;
    }
    std::vector<int> lambda;
    for (int i = 1; i <= k; ++i) {
      lambda.push_back(e[k - i] - (k - i + 1));
    }
    // ways[v]: number of admissible mu_1, ..., mu_i with mu_i = v
    std::vector<BigInt> ways(lambda[0] + 1, BigInt(1));
    for (int i = 1; i < k; ++i) {
      std::vector<BigInt> next(lambda[i] + 1, BigInt(0));
      BigInt              suffix = 0;
      for (int v = static_cast<int>(ways.size()) - 1; v >= 0; --v) {
        suffix += ways[v];
        if (v <= lambda[i]) {
          next[v] = suffix;
        }
      }
      ways = std::move(next);
    }
    BigInt total = 0;
    for (auto const& w : ways) {
      total += w;
    }
    return total;
  }

  namespace detail {
    inline void inclusion_exclusion(SubsetFamily const& sets,
                                    std::size_t         start,
                                    Subset const&       current,
                                    int                 size,
                                    BigInt&             total) {
      for (std::size_t i = start; i < sets.size(); ++i) {
        Subset next = size == 0 ? sets[i] : meet(current, sets[i]);
        if (size % 2 == 0) {
          total += dim_single(next);
        } else {
          total -= dim_single(next);
        }
        inclusion_exclusion(sets, i + 1, next, size + 1, total);
      }
    }
  }  // namespace detail

  //! dim B_n v by inclusion-exclusion over the reduced support, applied
  //! within each cardinality class and summed over the classes:
  //!
  //!   sum_{nonempty J} (-1)^{|J|-1} dim B_n v_{S_J},  S_J = meet of J.
  inline BigInt dim_cyclic(ModuleVector const& v) {
    std::map<int, SubsetFamily> classes;
    for (auto const& s : reduced_support(v).sets) {
      classes[s.size()].push_back(s);
    }
    BigInt total = 0;
    for (auto const& [k, sets] : classes) {
      detail::inclusion_exclusion(sets, 0, Subset(v.degree()), 0, total);
    }
    return total;
  }

  //! S_{k,m} = {2, 4, ..., 2m, 2m + 1, ..., m + k} as a subset of {1, ...,
  //! n}; n defaults to m + k.
  inline Subset mixed_subset(int k, int m, int n = -1) {
    if (k < 0 || m < 0 || m > k) {
      throw Error(ErrorCode::invalid_range,
                  "S_{k,m} needs 0 <= m <= k, got k = " + std::to_string(k)
                      + ", m = " + std::to_string(m));
    }
    if (n < 0) {
      n = m + k;
    }
    if (n < m + k) {
      throw Error(ErrorCode::invalid_range,
                  "S_{" + std::to_string(k) + "," + std::to_string(m)
                      + "} does not fit in {1.." + std::to_string(n) + "}");
    }
    Subset s(n);
    for (int i = 1; i <= m; ++i) {
      s.insert(2 * i);
    }
    for (int x = 2 * m + 1; x <= m + k; ++x) {
      s.insert(x);
    }
    return s;
  }

  //! d_{k,m} = dim B_n v_{S_{k,m}}. For m >= 2 this evaluates the closed
  //! form with gamma_1 = 1, gamma_2 = ... = gamma_{k-m+2} = 0,
  //! gamma_{k-m+3} = -1 and, for i >= k - m + 4,
  //!
  //!   gamma_i = -C(m - k + 2i - 4, i - 1)
  //!             - sum_{j=k-m+3}^{i-2} C(2(i - j - 1), i - j) gamma_j.
  //!
  //! m = 0 gives C(k, k) = 1 and m = 1 goes through dim_single.
  inline BigInt dim_mixed(int k, int m) {
    if (k < 0 || m < 0 || m > k) {
      throw Error(ErrorCode::invalid_range,
                  "d_{k,m} needs 0 <= m <= k, got k = " + std::to_string(k)
                      + ", m = " + std::to_string(m));
    }
    if (m == 0) {
      return binomial(k, k);
    }
    if (m == 1) {
      return dim_single(mixed_subset(k, m));
    }
    int const           first = k - m + 3;
    std::vector<BigInt> gamma(std::max(k, first) + 1, BigInt(0));
    gamma[1] = 1;
    if (first <= k) {
      gamma[first] = -1;
    }
    for (int i = first + 1; i <= k - 1; ++i) {
      BigInt g = -binomial(m - k + 2 * i - 4, i - 1);
      for (int j = first; j <= i - 2; ++j) {
        g -= binomial(2 * (i - j - 1), i - j) * gamma[j];
      }
      gamma[i] = g;
    }
    BigInt d = binomial(m + k, k) - binomial(m + k - 2, k)
               - 2 * binomial(m + k - 4, k - 1);
    for (int i = first; i <= k - 1; ++i) {
      d += binomial(2 * (k - i + 1), k + 1 - i) * gamma[i];
      d -= binomial(2 * (k - i), k + 1 - i) * gamma[i];
    }
    for (int i = first; i <= k - 2; ++i) {
      d -= 2 * binomial(2 * (k - i - 1), k - i) * gamma[i];
    }
    return d;
  }

  //! Right-hand side of the Catalan identity obtained from the closed
  //! recursion at S = {2, 4, ..., 2k}; equals c_{k+1} for k >= 2.
  inline BigInt catalan_identity(int k) {
    if (k < 2) {
      throw Error(ErrorCode::invalid_range,
                  "the identity needs k >= 2, got " + std::to_string(k));
    }
    std::vector<BigInt> gamma(k + 1, BigInt(0));
    gamma[1] = 1;
    for (int i = 2; i <= k; ++i) {
      BigInt g = 0;
      for (int j = 1; j <= i - 2; ++j) {
        g -= binomial(2 * (i - j - 1), i - j) * gamma[j];
      }
      gamma[i] = g;
    }
    BigInt c = 0;
    for (int i = 1; i <= k - 1; ++i) {
      c += binomial(2 * (k - i + 1), k + 1 - i) * gamma[i];
      c -= binomial(2 * (k - i), k + 1 - i) * gamma[i];
    }
    for (int i = 1; i <= k - 2; ++i) {
      c -= 2 * binomial(2 * (k - i - 1), k - i) * gamma[i];
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  //! Nonzero, and the reduced support lies in a single V_k.
  inline bool is_indecomposable(ModuleVector const& v) {
    auto red = reduced_support(v).sets;
    if (red.empty()) {
      return false;
    }
    return std::all_of(red.begin(), red.end(), [&red](Subset const& s) {
      return s.size() == red.front().size();
    });
  }

  //! Splits the reduced form of v by cardinality. The cyclic submodules of
  //! the summands are indecomposable and their direct sum is B_n v. Summands
  //! are ordered by increasing cardinality; v = 0 gives no summands.
  inline std::vector<ModuleVector> decompose(ModuleVector const& v) {
    std::map<int, ModuleVector> parts;
    for (auto const& s : reduced_support(v).sets) {
      parts.try_emplace(s.size(), v.degree()).first->second.add(s, 1);
    }
    std::vector<ModuleVector> out;
    for (auto& [k, w] : parts) {
      out.push_back(std::move(w));
    }
    return out;
  }

  //! v_{{1..k}}, spanning the unique irreducible submodule of V_k.
  inline ModuleVector minimal_irreducible(int k, int n) {
    validate_degree(n);
    if (k < 0 || k > n) {
      throw Error(ErrorCode::invalid_range,
                  "k = " + std::to_string(k) + " not in [0, "
                      + std::to_string(n) + "]");
    }
    return ModuleVector::basis(Subset::initial(n, k));
  }

  ////////////////////////////////////////////////////////////////////////
  // Branching
  ////////////////////////////////////////////////////////////////////////

  enum class SummandFamily {
    consecutive,  // W^m_k, spanned below {m + 1, ..., m + k}
    mixed,        // spanned below S_{k,m}
  };

  constexpr std::string_view to_string(SummandFamily f) noexcept {
    return f == SummandFamily::consecutive ? "consecutive" : "mixed";
  }

  //! An indecomposable summand, identified up to the isomorphism that deletes
  //! the points fixed by the smaller monoid.
  struct BranchSummand {
    SummandFamily family = SummandFamily::consecutive;
    int           m      = 0;
    int           k      = 0;
    BigInt        multiplicity;
    BigInt        dimension;

    bool operator==(BranchSummand const&) const = default;
  };

  namespace detail {
    inline bool summand_less(BranchSummand const& a, BranchSummand const& b) {
      return std::tie(a.family, a.m, a.k) < std::tie(b.family, b.m, b.k);
    }

    inline void check_branch_range(int m, int k, int l) {
      if (l < 1 || l >= k || m < 1 || m + k > max_degree) {
        throw Error(ErrorCode::invalid_range,
                    "branching needs 1 <= l < k and m >= 1, got m = "
                        + std::to_string(m) + ", k = " + std::to_string(k)
                        + ", l = " + std::to_string(l));
      }
    }

    //! The members of `group` that are above the fixed points `fixed` must
    //! form, after deleting `fixed`, the down-set of a single subset. Returns
    //! that subset.
    inline Subset group_generator(std::vector<Subset> const& group,
                                  Subset const&              fixed) {
      int const    n = fixed.degree();
      SubsetFamily stripped;
      for (auto const& t : group) {
        stripped.push_back(Subset::from_mask(n, t.mask() & ~fixed.mask()));
      }
      std::sort(stripped.begin(), stripped.end());
      auto top = maximal_elements(stripped);
      if (top.size() != 1 || down_set(top.front()) != stripped) {
        throw std::logic_error("branching group is not a cyclic down-set");
      }
      return top.front();
    }

    inline std::vector<BranchSummand>
    merge_summands(std::vector<BranchSummand> summands) {
      std::sort(summands.begin(), summands.end(), summand_less);
      std::vector<BranchSummand> out;
      for (auto& s : summands) {
        if (!out.empty() && out.back().family == s.family
            && out.back().m == s.m && out.back().k == s.k) {
          if (out.back().dimension != s.dimension) {
            throw std::logic_error("isomorphic summands of unequal dimension");
          }
          out.back().multiplicity += s.multiplicity;
        } else {
          out.push_back(std::move(s));
        }
      }
      return out;
    }
  }  // namespace detail

  //! The decomposition of W^m_k restricted to B_{m+l} as predicted by the
  //! branching rule: C(k - l, a) copies of W^{m+l-k+a}_{k-a} for 0 <= a <= k
  //! - l. Terms with m + l - k + a < 0 are zero modules and are omitted.
  inline std::vector<BranchSummand> branch_predict(int m, int k, int l) {
    detail::check_branch_range(m, k, l);
    std::vector<BranchSummand> out;
    for (int a = 0; a <= k - l; ++a) {
      int const mm = m + l - k + a;
      if (mm < 0) {
        continue;
      }
      out.push_back({SummandFamily::consecutive,
                     mm,
                     k - a,
                     binomial(k - l, a),
                     binomial(m + l, k - a)});
    }
    return detail::merge_summands(std::move(out));
  }

  //! The same decomposition computed directly: the basis of W^m_k is grouped
  //! by intersection with {m + l + 1, ..., m + k}; each group is the
  //! B_{m+l}-orbit of its largest member, and is labelled by that member
  //! with the fixed points removed.
  inline std::vector<BranchSummand> branch_compute(int m, int k, int l) {
    detail::check_branch_range(m, k, l);
    int const n     = m + k;
    auto      fixed = Subset::interval(n, m + l + 1, m + k);
    std::map<Subset::mask_type, std::vector<Subset>> groups;
    for (auto const& t : down_set(Subset::interval(n, m + 1, m + k))) {
      groups[t.mask() & fixed.mask()].push_back(t);
    }
    std::vector<BranchSummand> out;
    for (auto const& [key, group] : groups) {
      auto gen  = detail::group_generator(group, Subset::from_mask(n, key));
      auto elts = gen.elements();
      int  kk   = static_cast<int>(elts.size());
      int  mm   = elts.front() - 1;
      if (Subset::interval(n, mm + 1, mm + kk) != gen
          || elts.back() != m + l) {
        throw std::logic_error("branching group generator is not an interval");
      }
      out.push_back({SummandFamily::consecutive,
                     mm,
                     kk,
                     1,
                     BigInt(group.size())});
    }
    return detail::merge_summands(std::move(out));
  }

  //! W_k = span below {2, 4, ..., 2k} restricted to B_{2(k-1)}: two copies
  //! of W_{k-1} and one copy of the span below S_{k,k-2}.
  inline std::vector<BranchSummand> branch_even(int k) {
    if (k < 2 || 2 * k > max_degree) {
      throw Error(ErrorCode::invalid_range,
                  "branch_even needs k >= 2, got " + std::to_string(k));
    }
    return detail::merge_summands(
        {{SummandFamily::mixed, k - 1, k - 1, 2, catalan(k)},
         {SummandFamily::mixed, k - 2, k, 1, dim_mixed(k, k - 2)}});
  }

  //! Groups the basis of W_k by membership of 2k and 2k - 1 and identifies
  //! each group as the orbit of its largest member.
  inline std::vector<BranchSummand> branch_even_compute(int k) {
    if (k < 2 || 2 * k > max_degree) {
      throw Error(ErrorCode::invalid_range,
                  "branch_even needs k >= 2, got " + std::to_string(k));
    }
    int const n = 2 * k;
    std::vector<Subset> with_top, with_next, neither;
    for (auto const& t : down_set(mixed_subset(k, k))) {
      if (t.contains(2 * k)) {
        with_top.push_back(t);
      } else if (t.contains(2 * k - 1)) {
        with_next.push_back(t);
      } else {
        neither.push_back(t);
      }
    }
    std::vector<BranchSummand> out;
    auto identify = [&out, n](std::vector<Subset> const& group,
                              Subset const&              fixed) {
      if (group.empty()) {
        return;
      }
      auto gen = detail::group_generator(group, fixed);
      int  kk  = gen.size();
      for (int mm = 0; mm <= kk; ++mm) {
        if (mm + kk <= n && mixed_subset(kk, mm, n) == gen) {
          out.push_back(
              {SummandFamily::mixed, mm, kk, 1, BigInt(group.size())});
          return;
        }
      }
      throw std::logic_error("branching group generator is not some S_{k,m}");
    };
    identify(with_top, Subset(n, {2 * k}));
    identify(with_next, Subset(n, {2 * k - 1}));
    identify(neither, Subset(n));
    return detail::merge_summands(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form of vectors
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Rational parse_rational(std::string_view text, std::size_t offset) {
      auto slash = text.find('/');
      auto parse_int = [&](std::string_view t, std::size_t at) {
        std::size_t i = 0;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
          i = 1;
        }
        if (i == t.size()) {
          throw Error(ErrorCode::syntax_error, "expected an integer", at);
        }
        for (std::size_t j = i; j < t.size(); ++j) {
          if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
            throw Error(ErrorCode::syntax_error, "expected a digit", at + j);
          }
        }
        BigInt v(std::string(t.substr(t[0] == '+' ? 1 : 0)));
        return v;
      };
      if (slash == std::string_view::npos) {
        return Rational(parse_int(text, offset));
      }
      BigInt den = parse_int(text.substr(slash + 1), offset + slash + 1);
      if (den == 0) {
        throw Error(ErrorCode::syntax_error, "zero denominator",
                    offset + slash + 1);
      }
      return Rational(parse_int(text.substr(0, slash), offset), den);
    }

    inline std::string_view trim(std::string_view s, std::size_t& offset) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace detail

  //! Parses a comma separated list of increasing integers, e.g. "2,4,6";
  //! the empty string is the empty set. Braces around the list are allowed.
  inline Subset parse_subset(std::string_view text, int n,
                             std::size_t offset = 0) {
    text = detail::trim(text, offset);
    if (!text.empty() && text.front() == '{') {
      if (text.back() != '}') {
        throw Error(ErrorCode::syntax_error, "unbalanced '{'", offset);
      }
      text = text.substr(1, text.size() - 2);
      ++offset;
      text = detail::trim(text, offset);
    }
    Subset s(n);
    int    prev = 0;
    while (!text.empty()) {
      auto        comma = text.find(',');
      auto        item  = text.substr(0, comma);
      std::size_t at    = offset;
      item              = detail::trim(item, at);
      if (item.empty()
          || !std::all_of(item.begin(), item.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })
          || item.size() > 9) {
        throw Error(ErrorCode::syntax_error, "expected a positive integer", at);
      }
      int x = std::stoi(std::string(item));
      if (x <= prev) {
        throw Error(ErrorCode::syntax_error,
                    "elements must be strictly increasing", at);
      }
      s.insert(x);
      prev = x;
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
      offset += comma + 1;
    }
    return s;
  }

  //! Parses "c1:S1; c2:S2; ..." where each c is an integer or p/q (default
  //! 1 when the "c:" prefix is absent) and each S is as in parse_subset,
  //! e.g. "1:; -2:1; 1/2:{3}; 5:1,2".
  inline ModuleVector parse_vector(std::string_view text, int n) {
    ModuleVector v(n);
    std::size_t  offset = 0;
    while (true) {
      auto semi = text.find(';');
      auto term = text.substr(0, semi);
      auto at   = offset;
      term      = detail::trim(term, at);
      if (!term.empty()) {
        auto     colon = term.find(':');
        Rational c     = 1;
        auto     body  = term;
        auto     body_at = at;
        if (colon != std::string_view::npos) {
          auto coef_at = at;
          c = detail::parse_rational(detail::trim(term.substr(0, colon),
                                                  coef_at),
                                     coef_at);
          body    = term.substr(colon + 1);
          body_at = at + colon + 1;
        }
        v.add(parse_subset(body, n, body_at), c);
      }
      if (semi == std::string_view::npos) {
        break;
      }
      text.remove_prefix(semi + 1);
      offset += semi + 1;
    }
    return v;
  }

  //! Inverse of parse_vector, terms in canonical order.
  inline std::string format_vector(ModuleVector const& v) {
    std::string out;
    for (auto const& [s, c] : v.terms()) {
      if (!out.empty()) {
        out += "; ";
      }
      out += c.str() + ":";
      auto e = s.elements();
      for (std::size_t i = 0; i < e.size(); ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
      }
    }
    return out;
  }

}  // namespace rook

#endif  // ROOK_MODULE_HPP_

#ifndef ROOK_PRESENTATION_HPP_
#define ROOK_PRESENTATION_HPP_

#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "enumeration.hpp"
#include "error.hpp"
#include "partial_map.hpp"
#include "subset.hpp"

// Words in the generators l_1, ..., l_{n-1}, e_1, ..., e_n and the standard
// words E_T L^{S,T} E_S. A word g_1 g_2 ... g_k denotes the product
// g_1 g_2 ... g_k, i.e. the map g_1 o g_2 o ... o g_k, so the rightmost
// generator is applied first.

namespace rook {

  struct GeneratorSymbol {
    enum class Kind { L, E, ONE };

    Kind kind  = Kind::ONE;
    int  index = 0;

    static GeneratorSymbol l(int i) {
      return {Kind::L, i};
    }

    static GeneratorSymbol e(int j) {
      return {Kind::E, j};
    }

    static GeneratorSymbol one() {
      return {Kind::ONE, 0};
    }

    bool operator==(GeneratorSymbol const&) const = default;
  };

  inline std::string to_string(GeneratorSymbol const& g) {
    switch (g.kind) {
      case GeneratorSymbol::Kind::L: return "l" + std::to_string(g.index);
      case GeneratorSymbol::Kind::E: return "e" + std::to_string(g.index);
      case GeneratorSymbol::Kind::ONE: return "1";
    }
    return "?";
  }

  inline void validate_symbol(GeneratorSymbol const& g, int n) {
    bool ok = true;
    switch (g.kind) {
      case GeneratorSymbol::Kind::L: ok = g.index >= 1 && g.index <= n - 1; break;
      case GeneratorSymbol::Kind::E: ok = g.index >= 1 && g.index <= n; break;
      case GeneratorSymbol::Kind::ONE: break;
    }
    if (!ok) {
      throw Error(ErrorCode::index_out_of_range,
                  "generator " + to_string(g) + " does not exist for n = "
                      + std::to_string(n));
    }
  }

  //! A word in the generators; the empty word is the identity.
  struct Word {
    int                          n = 0;
    std::vector<GeneratorSymbol> symbols;

    bool operator==(Word const&) const = default;
  };

  //! Throws IndexOutOfRange for an invalid index.
  inline void validate_word(Word const& w) {
    validate_degree(w.n);
    for (auto const& g : w.symbols) {
      validate_symbol(g, w.n);
    }
  }

  //! Space separated tokens; "1" for the empty word.
  inline std::string to_string(Word const& w) {
    if (w.symbols.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& g : w.symbols) {
      out += (out.empty() ? "" : " ") + to_string(g);
    }
    return out;
  }

  inline Word concat(Word a, Word const& b) {
    if (a.n != b.n) {
      throw Error(ErrorCode::dimension_mismatch,
                  "words over n = " + std::to_string(a.n) + " and n = "
                      + std::to_string(b.n));
    }
    a.symbols.insert(a.symbols.end(), b.symbols.begin(), b.symbols.end());
    return a;
  }

  //! Whitespace separated tokens l<i>, e<j> and 1, e.g. "e2 l1 e1".
  inline Word parse_word(std::string_view text, int n) {
    validate_degree(n);
    Word        w{n, {}};
    std::size_t pos = 0;
    while (true) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == text.size()) {
        break;
      }
      std::size_t const start = pos;
      char const        head  = text[pos++];
      if (head == '1'
          && (pos == text.size()
              || std::isspace(static_cast<unsigned char>(text[pos])))) {
        w.symbols.push_back(GeneratorSymbol::one());
        continue;
      }
      if (head != 'l' && head != 'e') {
        throw Error(ErrorCode::syntax_error,
                    "expected a token l<i>, e<j> or 1",
                    start);
      }
      std::size_t const digits = pos;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (digits == pos || pos - digits > 9
          || (pos < text.size()
              && !std::isspace(static_cast<unsigned char>(text[pos])))) {
        throw Error(ErrorCode::syntax_error, "malformed generator token", start);
      }
      int const index
          = std::stoi(std::string(text.substr(digits, pos - digits)));
      auto const g = head == 'l' ? GeneratorSymbol::l(index)
                                 : GeneratorSymbol::e(index);
      validate_symbol(g, n);
      w.symbols.push_back(g);
    }
    return w;
  }

  //! The pair (S, T) standing for E_T L^{S,T} E_S, where T <= S.
  class StandardWord {
   public:
    StandardWord() = default;

    //! Throws DimensionMismatch, CardinalityMismatch, or InvalidRange when T
    //! is not below S.
    StandardWord(Subset s, Subset t) : _s(s), _t(t) {
      check_same_degree(s, t);
      if (s.size() != t.size()) {
        throw Error(ErrorCode::cardinality_mismatch,
                    to_string(s) + " and " + to_string(t)
                        + " have different sizes");
      }
      if (!subset_leq(t, s)) {
        throw Error(ErrorCode::invalid_range,
                    to_string(t) + " is not below " + to_string(s));
      }
    }

    static StandardWord identity(int n) {
      auto all = Subset::initial(n, n);
      return StandardWord(all, all);
    }

    static StandardWord zero(int n) {
      return StandardWord(Subset(n), Subset(n));
    }

    int degree() const noexcept {
      return _s.degree();
    }

    Subset const& S() const noexcept {
      return _s;
    }

    Subset const& T() const noexcept {
      return _t;
    }

    bool operator==(StandardWord const&) const = default;

   private:
    Subset _s;
    Subset _t;
  };

  inline std::string to_string(StandardWord const& w) {
    return "W^" + to_string(w.S()) + "_" + to_string(w.T());
  }

  inline PartialMap concrete_generator(GeneratorSymbol const& g, int n) {
    validate_degree(n);
    validate_symbol(g, n);
    std::vector<PartialMap::Pair> pairs;
    for (int x = 1; x <= n; ++x) {
      if (g.kind == GeneratorSymbol::Kind::L && x == g.index) {
        continue;
      }
      if (g.kind == GeneratorSymbol::Kind::E && x == g.index) {
        continue;
      }
      int const y
          = g.kind == GeneratorSymbol::Kind::L && x == g.index + 1 ? x - 1 : x;
      pairs.emplace_back(x, y);
    }
    return PartialMap(n, std::move(pairs));
  }

  inline PartialMap eval_word(Word const& w) {
    validate_word(w);
    auto result = PartialMap::identity(w.n);
    for (auto const& g : w.symbols) {
      result = compose(result, concrete_generator(g, w.n));
    }
    return result;
  }

  inline PartialMap std_to_element(StandardWord const& w) {
    return PartialMap::order_preserving(w.S(), w.T());
  }

  //! Throws NotInBn.
  inline StandardWord element_to_std(PartialMap const& f) {
    if (!in_Bn(f)) {
      throw Error(ErrorCode::not_in_bn,
                  "the map is not order preserving and order decreasing");
    }
    return StandardWord(f.domain(), f.range());
  }

  //! All standard words of degree n, S in canonical order and T below it.
  inline std::vector<StandardWord> standard_words(int n) {
    check_enumeration_bound(n, max_enumeration_degree);
    std::vector<StandardWord> out;
    for (int k = 0; k <= n; ++k) {
      for (auto const& s : subsets_of_size(n, k)) {
        for (auto const& t : down_set(s)) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  namespace detail {
    inline void append_E(Word& w, Subset const& keep) {
      for (int u = 1; u <= w.n; ++u) {
        if (!keep.contains(u)) {
          w.symbols.push_back(GeneratorSymbol::e(u));
        }
      }
    }

    // Position of x among the elements of s, counted from 0.
    inline int rank_in(Subset const& s, int x) {
      return std::popcount(s.mask() & Subset::full_mask(x - 1));
    }

    // The element of s at position r, counted from 0.
    inline int select(Subset const& s, int r) {
      auto m = s.mask();
      for (int i = 0; i < r; ++i) {
        m &= m - 1;
      }
      return std::countr_zero(m) + 1;
    }

    // W(x) for x in S and W^{-1}(y) for y in T.
    inline int image_of(StandardWord const& w, int x) {
      return select(w.T(), rank_in(w.S(), x));
    }

    inline int preimage_of(StandardWord const& w, int y) {
      return select(w.S(), rank_in(w.T(), y));
    }

    inline Subset without(Subset s, int x) {
      s.erase(x);
      return s;
    }

    inline Subset moved(Subset s, int from, int to) {
      s.erase(from);
      s.insert(to);
      return s;
    }
  }  // namespace detail

  //! E_T L^{S,T} E_S as a literal word, with L^{S,T} = L^{s_k,t_k} ...
  //! L^{s_1,t_1} and L^{a,b} = l_b l_{b+1} ... l_{a-1}.
  inline Word expand_std(StandardWord const& w) {
    Word out{w.degree(), {}};
    detail::append_E(out, w.T());
    auto const s = w.S().elements();
    auto const t = w.T().elements();
    for (std::size_t c = s.size(); c-- > 0;) {
      for (int i = t[c]; i < s[c]; ++i) {
        out.symbols.push_back(GeneratorSymbol::l(i));
      }
    }
    detail::append_E(out, w.S());
    return out;
  }

  //! W g, by the case tables for right multiplication.
  inline StandardWord mul_std_right(StandardWord const& w,
                                    GeneratorSymbol const& g) {
    validate_symbol(g, w.degree());
    auto const& S = w.S();
    auto const& T = w.T();
    int const   i = g.index;
    switch (g.kind) {
      case GeneratorSymbol::Kind::ONE: return w;
      case GeneratorSymbol::Kind::E:
        if (!S.contains(i)) {
          return w;
        }
        return StandardWord(detail::without(S, i),
                            detail::without(T, detail::image_of(w, i)));
      case GeneratorSymbol::Kind::L: {
        bool const a = S.contains(i), b = S.contains(i + 1);
        if (!a && !b) {
          return w;
        }
        if (a && b) {
          return StandardWord(detail::without(S, i),
                              detail::without(T, detail::image_of(w, i + 1)));
        }
        if (a) {
          return StandardWord(detail::moved(S, i, i + 1), T);
        }
        return StandardWord(detail::without(S, i + 1),
                            detail::without(T, detail::image_of(w, i + 1)));
      }
    }
    return w;
  }

  //! g W, by the case tables for left multiplication.
  inline StandardWord mul_std_left(GeneratorSymbol const& g,
                                   StandardWord const&    w) {
    validate_symbol(g, w.degree());
    auto const& S = w.S();
    auto const& T = w.T();
    int const   i = g.index;
    switch (g.kind) {
      case GeneratorSymbol::Kind::ONE: return w;
      case GeneratorSymbol::Kind::E:
        if (!T.contains(i)) {
          return w;
        }
        return StandardWord(detail::without(S, detail::preimage_of(w, i)),
                            detail::without(T, i));
      case GeneratorSymbol::Kind::L: {
        bool const a = T.contains(i), b = T.contains(i + 1);
        if (!a && !b) {
          return w;
        }
        if (a && b) {
          return StandardWord(detail::without(S, detail::preimage_of(w, i)),
                              detail::without(T, i + 1));
        }
        if (a) {
          return StandardWord(detail::without(S, detail::preimage_of(w, i)),
                              detail::without(T, i));
        }
        return StandardWord(S, detail::moved(T, i + 1, i));
      }
    }
    return w;
  }

  //! Continues the right fold of `rewrite` from `start`.
  inline StandardWord rewrite_from(StandardWord start, Word const& w) {
    if (start.degree() != w.n) {
      throw Error(ErrorCode::dimension_mismatch,
                  "standard word of degree " + std::to_string(start.degree())
                      + " extended by a word over n = " + std::to_string(w.n));
    }
    for (auto const& g : w.symbols) {
      start = mul_std_right(start, g);
    }
    return start;
  }

  //! The standard word equal to w modulo the defining relations.
  inline StandardWord rewrite(Word const& w) {
    validate_word(w);
    return rewrite_from(StandardWord::identity(w.n), w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Defining relations
  ////////////////////////////////////////////////////////////////////////

  //! One instance of a relation: all the words must be equal.
  struct RelationInstance {
    int               family = 0;
    std::vector<Word> sides;
  };

  struct RelationFamilyReport {
    int          family = 0;
    std::string  statement;
    std::int64_t instances = 0;
    std::int64_t failures  = 0;
  };

  namespace detail {
    inline Word make_word(int n, std::vector<GeneratorSymbol> symbols) {
      return Word{n, std::move(symbols)};
    }
  }  // namespace detail

  inline constexpr int relation_family_count = 7;

  inline std::string_view relation_statement(int family) {
    switch (family) {
      case 1: return "e_i e_i = e_i";
      case 2: return "l_i l_{i+1} l_i = l_i l_{i+1} = l_{i+1} l_i l_{i+1}";
      case 3: return "l_i e_i = l_i = e_{i+1} l_i";
      case 4: return "l_i e_{i+1} = e_i e_{i+1} = e_i l_i = l_i^3 = l_i^2";
      case 5: return "e_i l_j = l_j e_i, i != j, j+1";
      case 6: return "l_i l_j = l_j l_i, |i-j| >= 2";
      case 7: return "e_i e_j = e_j e_i";
    }
    return "";
  }

  //! Every instance of the defining relations with valid indices at n.
  inline std::vector<RelationInstance> relation_instances(int n) {
    validate_degree(n);
    using G = GeneratorSymbol;
    auto W  = [n](std::vector<G> s) {
      return detail::make_word(n, std::move(s));
    };
    std::vector<RelationInstance> out;
    for (int i = 1; i <= n; ++i) {
      out.push_back({1, {W({G::e(i), G::e(i)}), W({G::e(i)})}});
    }
    for (int i = 1; i + 2 <= n; ++i) {
      out.push_back({2,
                     {W({G::l(i), G::l(i + 1), G::l(i)}),
                      W({G::l(i), G::l(i + 1)}),
                      W({G::l(i + 1), G::l(i), G::l(i + 1)})}});
    }
    for (int i = 1; i + 1 <= n; ++i) {
      out.push_back({3,
                     {W({G::l(i), G::e(i)}),
                      W({G::l(i)}),
                      W({G::e(i + 1), G::l(i)})}});
    }
    for (int i = 1; i + 1 <= n; ++i) {
      out.push_back({4,
                     {W({G::l(i), G::e(i + 1)}),
                      W({G::e(i), G::e(i + 1)}),
                      W({G::e(i), G::l(i)}),
                      W({G::l(i), G::l(i), G::l(i)}),
                      W({G::l(i), G::l(i)})}});
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j + 1 <= n; ++j) {
        if (i != j && i != j + 1) {
          out.push_back(
              {5, {W({G::e(i), G::l(j)}), W({G::l(j), G::e(i)})}});
        }
      }
    }
    for (int i = 1; i + 1 <= n; ++i) {
      for (int j = 1; j + 1 <= n; ++j) {
        if (i - j >= 2 || j - i >= 2) {
          out.push_back(
              {6, {W({G::l(i), G::l(j)}), W({G::l(j), G::l(i)})}});
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        out.push_back({7, {W({G::e(i), G::e(j)}), W({G::e(j), G::e(i)})}});
      }
    }
    return out;
  }

  //! Evaluates both sides of every relation instance as partial maps, and
  //! also checks that rewriting sends them to the same standard word.
  inline std::vector<RelationFamilyReport> check_relations(int n) {
    std::vector<RelationFamilyReport> report;
    for (int f = 1; f <= relation_family_count; ++f) {
      report.push_back({f, std::string(relation_statement(f)), 0, 0});
    }
    for (auto const& r : relation_instances(n)) {
      auto& row = report[r.family - 1];
      ++row.instances;
      auto const map = eval_word(r.sides.front());
      auto const nf  = rewrite(r.sides.front());
      for (auto const& side : r.sides) {
        if (eval_word(side) != map || rewrite(side) != nf) {
          ++row.failures;
          break;
        }
      }
    }
    return report;
  }

}  // namespace rook

#endif  // ROOK_PRESENTATION_HPP_

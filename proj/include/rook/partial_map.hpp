#ifndef ROOK_PARTIAL_MAP_HPP_
#define ROOK_PARTIAL_MAP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "subset.hpp"

namespace rook {

  //! An injective partial map of {1, ..., n}, stored as (s, f(s)) pairs sorted
  //! by s. Equality is structural, so maps of different degree never compare
  //! equal.
  class PartialMap {
   public:
    using Pair = std::pair<int, int>;

    PartialMap() = default;

    //! The zero map of degree n.
    explicit PartialMap(int n) : _n(n) {
      validate_degree(n);
    }

    //! Throws DuplicateDomain, DuplicateRange or IndexOutOfRange.
    PartialMap(int n, std::vector<Pair> pairs) : PartialMap(n) {
      for (auto const& [s, t] : pairs) {
        if (s < 1 || s > n || t < 1 || t > n) {
          throw Error(ErrorCode::index_out_of_range,
                      "pair (" + std::to_string(s) + "," + std::to_string(t)
                          + ") outside [1, " + std::to_string(n) + "]");
        }
      }
      std::sort(pairs.begin(), pairs.end());
      Subset range(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0 && pairs[i].first == pairs[i - 1].first) {
          throw Error(ErrorCode::duplicate_domain,
                      std::to_string(pairs[i].first)
                          + " appears twice in the domain");
        }
        if (range.contains(pairs[i].second)) {
          throw Error(ErrorCode::duplicate_range,
                      std::to_string(pairs[i].second)
                          + " appears twice in the range");
        }
        range.insert(pairs[i].second);
      }
      _pairs = std::move(pairs);
    }

    static PartialMap identity(int n) {
      std::vector<Pair> pairs;
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(i, i);
      }
      return PartialMap(n, std::move(pairs));
    }

    static PartialMap zero(int n) {
      return PartialMap(n);
    }

    //! The unique order preserving bijection from `domain` onto `range`.
    static PartialMap order_preserving(Subset const& domain,
                                       Subset const& range) {
      check_same_degree(domain, range);
      if (domain.size() != range.size()) {
        throw Error(ErrorCode::cardinality_mismatch,
                    to_string(domain) + " and " + to_string(range)
                        + " have different sizes");
      }
      auto              d = domain.elements();
      auto              r = range.elements();
      std::vector<Pair> pairs;
      pairs.reserve(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        pairs.emplace_back(d[i], r[i]);
      }
      PartialMap f(domain.degree());
      f._pairs = std::move(pairs);
      return f;
    }

    int degree() const noexcept {
      return _n;
    }

    std::vector<Pair> const& pairs() const noexcept {
      return _pairs;
    }

    //! Number of points in the domain.
    int rank() const noexcept {
      return static_cast<int>(_pairs.size());
    }

    bool is_zero() const noexcept {
      return _pairs.empty();
    }

    Subset domain() const {
      Subset d(_n);
      for (auto const& p : _pairs) {
        d.insert(p.first);
      }
      return d;
    }

    Subset range() const {
      Subset r(_n);
      for (auto const& p : _pairs) {
        r.insert(p.second);
      }
      return r;
    }

    std::optional<int> operator()(int x) const {
      auto it = std::lower_bound(
          _pairs.begin(), _pairs.end(), x, [](Pair const& p, int v) {
            return p.first < v;
          });
      if (it == _pairs.end() || it->first != x) {
        return std::nullopt;
      }
      return it->second;
    }

    bool operator==(PartialMap const&) const = default;

   private:
    int               _n = 0;
    std::vector<Pair> _pairs;
  };

  inline void check_same_degree(PartialMap const& a, PartialMap const& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "maps of degree " + std::to_string(a.degree()) + " and "
                      + std::to_string(b.degree()));
    }
  }

  //! g o f, i.e. x -> g(f(x)); the matrix of the result is M(g) M(f).
  inline PartialMap compose(PartialMap const& g, PartialMap const& f) {
    check_same_degree(g, f);
    std::vector<int> table(g.degree() + 1, 0);
    for (auto const& [s, t] : g.pairs()) {
      table[s] = t;
    }
    std::vector<PartialMap::Pair> pairs;
    for (auto const& [s, t] : f.pairs()) {
      if (table[t] != 0) {
        pairs.emplace_back(s, table[t]);
      }
    }
    return PartialMap(g.degree(), std::move(pairs));
  }

  inline PartialMap operator*(PartialMap const& g, PartialMap const& f) {
    return compose(g, f);
  }

  //! a < b in the domain implies f(a) < f(b).
  inline bool is_order_preserving(PartialMap const& f) noexcept {
    auto const& p = f.pairs();
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p[i - 1].second >= p[i].second) {
        return false;
      }
    }
    return true;
  }

  //! f(a) <= a for every a in the domain.
  inline bool is_order_decreasing(PartialMap const& f) noexcept {
    return std::all_of(f.pairs().begin(), f.pairs().end(), [](auto const& p) {
      return p.second <= p.first;
    });
  }

  inline bool in_Bn(PartialMap const& f) noexcept {
    return is_order_preserving(f) && is_order_decreasing(f);
  }

  //! n x n 0/1 matrix; entry (i, j) is 1 when the map sends j to i.
  //! Rows and columns are 1-based in the accessors.
  class RookMatrix {
   public:
    RookMatrix() = default;

    explicit RookMatrix(int n)
        : _n(n), _entries(static_cast<std::size_t>(n) * n, 0) {
      validate_degree(n);
    }

    //! Throws NotARookMatrix unless entries is n*n zeros and ones with at
    //! most one 1 per row and per column.
    RookMatrix(int n, std::vector<std::uint8_t> entries) : RookMatrix(n) {
      if (entries.size() != _entries.size()) {
        throw Error(ErrorCode::not_a_rook_matrix,
                    "expected " + std::to_string(_entries.size())
                        + " entries, got " + std::to_string(entries.size()));
      }
      _entries = std::move(entries);
      validate();
    }

    int degree() const noexcept {
      return _n;
    }

    std::uint8_t at(int row, int col) const {
      return _entries[index(row, col)];
    }

    void set(int row, int col, std::uint8_t value) {
      _entries[index(row, col)] = value;
    }

    std::vector<std::uint8_t> const& entries() const noexcept {
      return _entries;
    }

    bool is_upper_triangular() const noexcept {
      for (int i = 1; i <= _n; ++i) {
        for (int j = 1; j < i; ++j) {
          if (at(i, j) != 0) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(RookMatrix const&) const = default;

   private:
    std::size_t index(int row, int col) const {
      if (row < 1 || row > _n || col < 1 || col > _n) {
        throw Error(ErrorCode::index_out_of_range,
                    "entry (" + std::to_string(row) + "," + std::to_string(col)
                        + ") of a " + std::to_string(_n) + "x"
                        + std::to_string(_n) + " matrix");
      }
      return static_cast<std::size_t>(row - 1) * _n + (col - 1);
    }

    void validate() const {
      std::vector<int> row_count(_n + 1, 0), col_count(_n + 1, 0);
      for (int i = 1; i <= _n; ++i) {
        for (int j = 1; j <= _n; ++j) {
          auto v = at(i, j);
          if (v > 1) {
            throw Error(ErrorCode::not_a_rook_matrix,
                        "entry (" + std::to_string(i) + ","
                            + std::to_string(j) + ") is not 0 or 1");
          }
          if (v == 1 && (++row_count[i] > 1 || ++col_count[j] > 1)) {
            throw Error(ErrorCode::not_a_rook_matrix,
                        "row " + std::to_string(i) + " or column "
                            + std::to_string(j) + " has two nonzero entries");
          }
        }
      }
    }

    int                       _n = 0;
    std::vector<std::uint8_t> _entries;
  };

  inline RookMatrix to_matrix(PartialMap const& f) {
    RookMatrix m(f.degree());
    for (auto const& [s, t] : f.pairs()) {
      m.set(t, s, 1);
    }
    return m;
  }

  inline PartialMap from_matrix(RookMatrix const& m) {
    std::vector<PartialMap::Pair> pairs;
    for (int j = 1; j <= m.degree(); ++j) {
      for (int i = 1; i <= m.degree(); ++i) {
        if (m.at(i, j) != 0) {
          pairs.emplace_back(j, i);
        }
      }
    }
    return PartialMap(m.degree(), std::move(pairs));
  }

  //! Checks the three leading-entry conditions directly on the matrix:
  //! leading entries of nonzero rows move strictly right going down, leading
  //! entries of nonzero columns move strictly down going right, and every
  //! leading 1 is alone in its row and its column. Zero rows and columns may
  //! appear anywhere.
  inline bool is_generalized_reduced_echelon(RookMatrix const& m) {
    int const n        = m.degree();
    int       prev_col = 0;
    for (int i = 1; i <= n; ++i) {
      int lead = 0;
      for (int j = 1; j <= n && lead == 0; ++j) {
        if (m.at(i, j) != 0) {
          lead = j;
        }
      }
      if (lead == 0) {
        continue;
      }
      if (m.at(i, lead) != 1 || lead <= prev_col) {
        return false;
      }
      for (int j = 1; j <= n; ++j) {
        if (j != lead && m.at(i, j) != 0) {
          return false;
        }
      }
      for (int r = 1; r <= n; ++r) {
        if (r != i && m.at(r, lead) != 0) {
          return false;
        }
      }
      prev_col = lead;
    }
    int prev_row = 0;
    for (int j = 1; j <= n; ++j) {
      int lead = 0;
      for (int i = 1; i <= n && lead == 0; ++i) {
        if (m.at(i, j) != 0) {
          lead = i;
        }
      }
      if (lead == 0) {
        continue;
      }
      if (m.at(lead, j) != 1 || lead <= prev_row) {
        return false;
      }
      prev_row = lead;
    }
    return true;
  }

  //! Integer matrix product of two rook matrices (the result is again one).
  inline RookMatrix operator*(RookMatrix const& a, RookMatrix const& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "matrices of size " + std::to_string(a.degree()) + " and "
                      + std::to_string(b.degree()));
    }
    int const                 n = a.degree();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        if (a.at(i, k) == 0) {
          continue;
        }
        for (int j = 1; j <= n; ++j) {
          out[static_cast<std::size_t>(i - 1) * n + (j - 1)]
              += a.at(i, k) * b.at(k, j);
        }
      }
    }
    return RookMatrix(n, std::move(out));
  }

}  // namespace rook

#endif  // ROOK_PARTIAL_MAP_HPP_

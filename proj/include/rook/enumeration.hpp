#ifndef ROOK_ENUMERATION_HPP_
#define ROOK_ENUMERATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "partial_map.hpp"
#include "subset.hpp"

namespace rook {

  //! Practical bound for exhaustive iteration over B_n (|B_14| = 9694845).
  inline constexpr int max_enumeration_degree = 14;

  //! Practical bound for brute force over all n x n rook matrices.
  inline constexpr int max_matrix_degree = 8;

  ////////////////////////////////////////////////////////////////////////
  // Catalan numbers
  ////////////////////////////////////////////////////////////////////////

  //! c_0 = c_1 = 1, c_m = sum_{i < m} c_i c_{m-1-i}, memoized. The cache is
  //! shared between threads and guarded by a mutex.
  inline BigInt catalan(int m) {
    if (m < 0) {
      throw Error(ErrorCode::invalid_range,
                  "catalan index " + std::to_string(m) + " is negative");
    }
    static std::mutex          mtx;
    static std::vector<BigInt> cache = {1, 1};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= m) {
      std::size_t j = cache.size();
      BigInt      c = 0;
      for (std::size_t i = 0; i < j; ++i) {
        c += cache[i] * cache[j - 1 - i];
      }
      cache.push_back(c);
    }
    return cache[m];
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of B_n
  ////////////////////////////////////////////////////////////////////////

  inline void check_enumeration_bound(int n, int bound) {
    validate_degree(n);
    if (n > bound) {
      throw Error(ErrorCode::bound_exceeded,
                  "degree " + std::to_string(n) + " exceeds the bound "
                      + std::to_string(bound));
    }
  }

  //! Calls visit(f) once for every f in B_n, in lexicographic order of
  //! (domain bitmask, range bitmask). Elements correspond to pairs T <= S of
  //! equal-size subsets via S = D(f), T = R(f).
  template <typename Visitor>
  void for_each_Bn(int n, Visitor&& visit) {
    check_enumeration_bound(n, max_enumeration_degree);
    Subset::mask_type const end = Subset::mask_type(1) << n;
    for (Subset::mask_type sm = 0; sm < end; ++sm) {
      auto s  = Subset::from_mask(n, sm);
      auto ts = down_set(s);
      std::sort(ts.begin(), ts.end(), [](Subset const& a, Subset const& b) {
        return a.mask() < b.mask();
      });
      for (auto const& t : ts) {
        visit(PartialMap::order_preserving(s, t));
      }
    }
  }

  inline std::vector<PartialMap> enumerate_Bn(int n) {
    std::vector<PartialMap> out;
    for_each_Bn(n, [&out](PartialMap const& f) { out.push_back(f); });
    return out;
  }

  inline BigInt order_Bn(int n) {
    validate_degree(n);
    return catalan(n + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Recursive order formula
  ////////////////////////////////////////////////////////////////////////

  //! The orders b_0, ..., b_n together with the table of b_{p,q}, the number
  //! of f in B_n with D(f) in {n-q, ..., n} and R(f) in {n-p, ..., n}, for
  //! 0 <= q <= p <= n - 1. Everything is computed from the base cases
  //! b_0 = 1, b_1 = 2, b_{p,0} = p + 2, b_{p,p} = b_{p+1} and the two
  //! recurrences
  //!
  //!   b_m     = 2 b_{m-1} + 1 + sum_{q=0}^{m-3} b_{m-2,q}    (m >= 2)
  //!   b_{p,q} = 1 + sum_{r=0}^{q} b_{p-1,r}                  (1 <= q < p).
  //!
  //! Defined for n >= 1; b_0 = 1 is handled by order_recursive directly.
  class OrderTable {
   public:
    explicit OrderTable(int n) : _n(n) {
      validate_degree(n);
      if (n < 1) {
        throw Error(ErrorCode::invalid_range, "OrderTable needs n >= 1");
      }
      _b = {1, 2};
      _bpq.resize(n);
      for (int m = 2; m <= n; ++m) {
        fill_row(m - 2);
        BigInt bm = 2 * _b[m - 1] + 1;
        for (int q = 0; q <= m - 3; ++q) {
          bm += _bpq[m - 2][q];
        }
        _b.push_back(bm);
      }
      // the last row is not needed for b_n itself
      fill_row(n - 1);
    }

    int degree() const noexcept {
      return _n;
    }

    //! b_n
    BigInt const& order() const noexcept {
      return _b[_n];
    }

    //! b_m for 0 <= m <= n
    BigInt const& b(int m) const {
      if (m < 0 || m > _n) {
        throw Error(ErrorCode::invalid_range,
                    "b_" + std::to_string(m) + " outside table of degree "
                        + std::to_string(_n));
      }
      return _b[m];
    }

    //! b_{p,q} for 0 <= q <= p <= n - 1
    BigInt const& bpq(int p, int q) const {
      if (p < 0 || p >= _n || q < 0 || q > p) {
        throw Error(ErrorCode::invalid_range,
                    "b_{" + std::to_string(p) + "," + std::to_string(q)
                        + "} outside table of degree " + std::to_string(_n));
      }
      return _bpq[p][q];
    }

    //! Evaluates 1 + sum_{r=0}^{q} b_{p-1,r} for 1 <= p, 0 <= q <= p. When
    //! q = p the term b_{p-1,p} is read as b_{p-1,p-1}: no domain point
    //! n - p can map into {n - p + 1, ..., n}.
    BigInt bpq_by_recurrence(int p, int q) const {
      if (p < 1 || p >= _n || q < 0 || q > p) {
        throw Error(ErrorCode::invalid_range,
                    "recurrence for b_{" + std::to_string(p) + ","
                        + std::to_string(q) + "} outside table");
      }
      BigInt out = 1;
      for (int r = 0; r <= q; ++r) {
        out += _bpq[p - 1][std::min(r, p - 1)];
      }
      return out;
    }

   private:
    void fill_row(int p) {
      if (!_bpq[p].empty()) {
        return;
      }
      auto& row = _bpq[p];
      row.resize(p + 1);
      row[0] = p + 2;
      for (int q = 1; q < p; ++q) {
        BigInt v = 1;
        for (int r = 0; r <= q; ++r) {
          v += _bpq[p - 1][r];
        }
        row[q] = v;
      }
      if (p > 0) {
        row[p] = _b[p + 1];
      }
    }

    int                              _n;
    std::vector<BigInt>              _b;
    std::vector<std::vector<BigInt>> _bpq;
  };

  inline BigInt order_recursive(int n) {
    validate_degree(n);
    if (n == 0) {
      return 1;
    }
    return OrderTable(n).order();
  }

  ////////////////////////////////////////////////////////////////////////
  // Ballot sequences
  ////////////////////////////////////////////////////////////////////////

  //! A sequence of n + 1 steps +1 and n + 1 steps -1 whose prefix sums are
  //! all nonnegative.
  class BallotSequence {
   public:
    //! Throws InvalidBallot if the steps violate any of the conditions.
    BallotSequence(int n, std::vector<std::int8_t> steps)
        : _n(n), _steps(std::move(steps)) {
      validate_degree(n);
      if (_steps.size() != 2 * static_cast<std::size_t>(n) + 2) {
        throw Error(ErrorCode::invalid_ballot,
                    "expected " + std::to_string(2 * n + 2) + " steps, got "
                        + std::to_string(_steps.size()));
      }
      int sum = 0;
      for (std::size_t i = 0; i < _steps.size(); ++i) {
        if (_steps[i] != 1 && _steps[i] != -1) {
          throw Error(ErrorCode::invalid_ballot, "steps must be +1 or -1");
        }
        sum += _steps[i];
        if (sum < 0) {
          throw Error(ErrorCode::invalid_ballot,
                      "prefix sum negative after step " + std::to_string(i + 1));
        }
      }
      if (sum != 0) {
        throw Error(ErrorCode::invalid_ballot,
                    "unequal numbers of +1 and -1 steps");
      }
    }

    //! '1' for +1 and '0' for -1, e.g. "1010".
    static BallotSequence parse(int n, std::string_view text) {
      std::vector<std::int8_t> steps;
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
          steps.push_back(1);
        } else if (text[i] == '0') {
          steps.push_back(-1);
        } else {
          throw Error(ErrorCode::syntax_error, "expected '0' or '1'", i);
        }
      }
      return BallotSequence(n, std::move(steps));
    }

    int degree() const noexcept {
      return _n;
    }

    std::vector<std::int8_t> const& steps() const noexcept {
      return _steps;
    }

    std::string str() const {
      std::string out;
      for (auto s : _steps) {
        out += s == 1 ? '1' : '0';
      }
      return out;
    }

    bool operator==(BallotSequence const&) const = default;

   private:
    int                      _n;
    std::vector<std::int8_t> _steps;
  };

  //! Block encoding: with D(f) = {s_1 < ... < s_k} and R(f) = {t_1 < ... <
  //! t_k}, emit s'_1 ones, t'_1 minus ones, ..., s'_{k+1} ones, t'_{k+1}
  //! minus ones, where s'_i = s_i - s_{i-1} (s_0 = 0) and s'_{k+1} = n + 1 -
  //! s_k, likewise for t'. The zero map gives n + 1 ones then n + 1 minus
  //! ones.
  inline BallotSequence ballot_encode(PartialMap const& f) {
    if (!in_Bn(f)) {
      throw Error(ErrorCode::not_in_bn, "ballot_encode needs an element of B_n");
    }
    int const                n = f.degree();
    std::vector<std::int8_t> steps;
    steps.reserve(2 * n + 2);
    int prev_s = 0, prev_t = 0;
    auto emit = [&steps](int count, std::int8_t value) {
      steps.insert(steps.end(), count, value);
    };
    for (auto const& [s, t] : f.pairs()) {
      emit(s - prev_s, 1);
      emit(t - prev_t, -1);
      prev_s = s;
      prev_t = t;
    }
    emit(n + 1 - prev_s, 1);
    emit(n + 1 - prev_t, -1);
    return BallotSequence(n, std::move(steps));
  }

  inline PartialMap ballot_decode(BallotSequence const& b) {
    auto const&                   steps = b.steps();
    std::vector<PartialMap::Pair> pairs;
    int                           s = 0, t = 0;
    std::size_t                   i = 0;
    while (i < steps.size()) {
      while (i < steps.size() && steps[i] == 1) {
        ++s;
        ++i;
      }
      while (i < steps.size() && steps[i] == -1) {
        ++t;
        ++i;
      }
      // the final block reaches n + 1 on both sides and is not a pair
      if (i < steps.size()) {
        pairs.emplace_back(s, t);
      }
    }
    PartialMap f(b.degree(), std::move(pairs));
    if (!in_Bn(f)) {
      throw Error(ErrorCode::invalid_ballot, "sequence does not decode into B_n");
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Planar rook monoid and echelon matrices
  ////////////////////////////////////////////////////////////////////////

  inline BigInt order_PRn(int n) {
    validate_degree(n);
    return binomial(2 * n, n);
  }

  //! Calls visit(M) for every n x n rook matrix.
  template <typename Visitor>
  void for_each_rook_matrix(int n, Visitor&& visit) {
    check_enumeration_bound(n, max_matrix_degree);
    RookMatrix        m(n);
    std::vector<bool> row_used(n + 1, false);
    std::function<void(int)> place = [&](int col) {
      if (col > n) {
        visit(static_cast<RookMatrix const&>(m));
        return;
      }
      place(col + 1);
      for (int row = 1; row <= n; ++row) {
        if (!row_used[row]) {
          row_used[row] = true;
          m.set(row, col, 1);
          place(col + 1);
          m.set(row, col, 0);
          row_used[row] = false;
        }
      }
    };
    place(1);
  }

  //! Brute-force count of upper triangular generalized reduced echelon
  //! matrices of size n.
  inline BigInt count_echelon(int n) {
    BigInt count = 0;
    for_each_rook_matrix(n, [&count](RookMatrix const& m) {
      if (m.is_upper_triangular() && is_generalized_reduced_echelon(m)) {
        ++count;
      }
    });
    return count;
  }

  //! Brute-force count of generalized reduced echelon rook matrices of size
  //! n; these are the matrices of PR_n.
  inline BigInt count_planar(int n) {
    BigInt count = 0;
    for_each_rook_matrix(n, [&count](RookMatrix const& m) {
      if (is_generalized_reduced_echelon(m)) {
        ++count;
      }
    });
    return count;
  }

}  // namespace rook

#endif  // ROOK_ENUMERATION_HPP_

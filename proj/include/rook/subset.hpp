#ifndef ROOK_SUBSET_HPP_
#define ROOK_SUBSET_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace rook {

  //! Largest supported degree; every subset of {1, ..., n} fits in one word.
  inline constexpr int max_degree = 62;

  inline void validate_degree(int n) {
    if (n < 0 || n > max_degree) {
      throw Error(ErrorCode::index_out_of_range,
                  "degree " + std::to_string(n) + " not in [0, "
                      + std::to_string(max_degree) + "]");
    }
  }

  //! A subset of {1, ..., n} stored as a bitmask; element i is bit i - 1.
  class Subset {
   public:
    using mask_type = std::uint64_t;

    Subset() = default;

    explicit Subset(int n) : _n(n) {
      validate_degree(n);
    }

    //! Throws IndexOutOfRange if an element is outside {1, ..., n}.
    //! Repeated elements are collapsed.
    Subset(int n, std::span<int const> elements) : Subset(n) {
      for (int x : elements) {
        if (x < 1 || x > n) {
          throw Error(ErrorCode::index_out_of_range,
                      "element " + std::to_string(x) + " not in [1, "
                          + std::to_string(n) + "]");
        }
        _mask |= bit(x);
      }
    }

    Subset(int n, std::initializer_list<int> elements)
        : Subset(n, std::span<int const>(elements.begin(), elements.size())) {}

    static Subset from_mask(int n, mask_type mask) {
      Subset s(n);
      if ((mask & ~full_mask(n)) != 0) {
        throw Error(ErrorCode::index_out_of_range,
                    "mask has bits outside [1, " + std::to_string(n) + "]");
      }
      s._mask = mask;
      return s;
    }

    //! {1, ..., k}
    static Subset initial(int n, int k) {
      check_cardinality(n, k);
      return from_mask(n, full_mask(k));
    }

    //! {n - k + 1, ..., n}
    static Subset terminal(int n, int k) {
      check_cardinality(n, k);
      return from_mask(n, full_mask(n) & ~full_mask(n - k));
    }

    //! {first, ..., last}, empty when first > last.
    static Subset interval(int n, int first, int last) {
      Subset s(n);
      for (int x = first; x <= last; ++x) {
        s.insert(x);
      }
      return s;
    }

    static mask_type full_mask(int n) noexcept {
      return n >= 64 ? ~mask_type(0) : (mask_type(1) << n) - 1;
    }

    int degree() const noexcept {
      return _n;
    }

    mask_type mask() const noexcept {
      return _mask;
    }

    int size() const noexcept {
      return std::popcount(_mask);
    }

    bool empty() const noexcept {
      return _mask == 0;
    }

    bool contains(int x) const noexcept {
      return x >= 1 && x <= _n && (_mask & bit(x)) != 0;
    }

    bool is_subset_of(Subset const& other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }

    void insert(int x) {
      if (x < 1 || x > _n) {
        throw Error(ErrorCode::index_out_of_range,
                    "element " + std::to_string(x) + " not in [1, "
                        + std::to_string(_n) + "]");
      }
      _mask |= bit(x);
    }

    void erase(int x) noexcept {
      if (x >= 1 && x <= _n) {
        _mask &= ~bit(x);
      }
    }

    //! Elements in increasing order.
    std::vector<int> elements() const {
      std::vector<int> out;
      out.reserve(size());
      for (mask_type m = _mask; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
      }
      return out;
    }

    bool operator==(Subset const&) const = default;

    //! Canonical order: by degree, then cardinality, then lexicographically
    //! on the increasing element sequence.
    std::strong_ordering operator<=>(Subset const& other) const noexcept {
      if (auto c = _n <=> other._n; c != 0) {
        return c;
      }
      if (auto c = size() <=> other.size(); c != 0) {
        return c;
      }
      if (_mask == other._mask) {
        return std::strong_ordering::equal;
      }
      mask_type diff = _mask ^ other._mask;
      mask_type low  = diff & (~diff + 1);
      return (_mask & low) != 0 ? std::strong_ordering::less
                                : std::strong_ordering::greater;
    }

   private:
    static mask_type bit(int x) noexcept {
      return mask_type(1) << (x - 1);
    }

    static void check_cardinality(int n, int k) {
      validate_degree(n);
      if (k < 0 || k > n) {
        throw Error(ErrorCode::invalid_range,
                    "cardinality " + std::to_string(k) + " not in [0, "
                        + std::to_string(n) + "]");
      }
    }

    int       _n    = 0;
    mask_type _mask = 0;
  };

  //! "{1,3,4}"
  inline std::string to_string(Subset const& s) {
    std::string out = "{";
    bool        first = true;
    for (int x : s.elements()) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

  inline void check_same_degree(Subset const& a, Subset const& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "subsets of {1.." + std::to_string(a.degree())
                      + "} and {1.." + std::to_string(b.degree()) + "}");
    }
  }

  //! T <= S iff |T| = |S| and t_i <= s_i for all i. Subsets of different
  //! cardinality are incomparable.
  inline bool subset_leq(Subset const& t, Subset const& s) {
    check_same_degree(t, s);
    if (t.size() != s.size()) {
      return false;
    }
    // Equivalent to the componentwise comparison: for every threshold x,
    // T has at least as many elements <= x as S does.
    auto tm = t.mask();
    auto sm = s.mask();
    for (int x = 1; x <= t.degree(); ++x) {
      auto below = Subset::full_mask(x);
      if (std::popcount(tm & below) < std::popcount(sm & below)) {
        return false;
      }
    }
    return true;
  }

  //! Elementwise minimum of two k-subsets; their greatest lower bound.
  inline Subset meet(Subset const& s, Subset const& t) {
    check_same_degree(s, t);
    if (s.size() != t.size()) {
      throw Error(ErrorCode::cardinality_mismatch,
                  "meet of " + to_string(s) + " and " + to_string(t));
    }
    auto   se = s.elements();
    auto   te = t.elements();
    Subset out(s.degree());
    for (std::size_t i = 0; i < se.size(); ++i) {
      out.insert(std::min(se[i], te[i]));
    }
    return out;
  }

  //! Subsets covered by s: decrease one element by one without colliding
  //! with its predecessor.
  inline std::vector<Subset> lower_covers(Subset const& s) {
    std::vector<Subset> out;
    auto                e = s.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      int lower = i == 0 ? 0 : e[i - 1];
      if (e[i] - 1 > lower) {
        Subset t = s;
        t.erase(e[i]);
        t.insert(e[i] - 1);
        out.push_back(t);
      }
    }
    return out;
  }

  namespace detail {
    inline void down_set_rec(std::vector<int> const& bounds,
                             std::size_t             i,
                             int                     lowest,
                             Subset&                 current,
                             std::vector<Subset>&    out) {
      if (i == bounds.size()) {
        out.push_back(current);
        return;
      }
      for (int x = lowest; x <= bounds[i]; ++x) {
        current.insert(x);
        down_set_rec(bounds, i + 1, x + 1, current, out);
        current.erase(x);
      }
    }
  }  // namespace detail

  //! All T with T <= S, in canonical order. Always contains S and {1..|S|}.
  inline std::vector<Subset> down_set(Subset const& s) {
    std::vector<Subset> out;
    Subset              current(s.degree());
    detail::down_set_rec(s.elements(), 0, 1, current, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  //! All k-subsets of {1, ..., n} in canonical order.
  inline std::vector<Subset> subsets_of_size(int n, int k) {
    return down_set(Subset::terminal(n, k));
  }

}  // namespace rook

template <>
struct std::hash<rook::Subset> {
  std::size_t operator()(rook::Subset const& s) const noexcept {
    return std::hash<std::uint64_t>()(s.mask()
                                      ^ (std::uint64_t(s.degree()) << 58));
  }
};

#endif  // ROOK_SUBSET_HPP_

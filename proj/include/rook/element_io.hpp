#ifndef ROOK_ELEMENT_IO_HPP_
#define ROOK_ELEMENT_IO_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "partial_map.hpp"

namespace rook {

  enum class ElementStyle {
    twoline,  // [{1,3,4,5}->{1,2,3,4}]
    pairs,    // {(1,1),(3,2),(4,3),(5,4)}
    matrix,   // n lines of space separated 0/1
  };

  inline std::string print_element(PartialMap const&  f,
                                   ElementStyle const style
                                   = ElementStyle::twoline) {
    std::string out;
    switch (style) {
      case ElementStyle::twoline: {
        std::string top, bottom;
        for (auto const& [s, t] : f.pairs()) {
          if (!top.empty()) {
            top += ',';
            bottom += ',';
          }
          top += std::to_string(s);
          bottom += std::to_string(t);
        }
        out = "[{" + top + "}->{" + bottom + "}]";
        break;
      }
      case ElementStyle::pairs: {
        out = "{";
        for (auto const& [s, t] : f.pairs()) {
          if (out.size() > 1) {
            out += ',';
          }
          out += "(" + std::to_string(s) + "," + std::to_string(t) + ")";
        }
        out += "}";
        break;
      }
      case ElementStyle::matrix: {
        auto m = to_matrix(f);
        for (int i = 1; i <= m.degree(); ++i) {
          for (int j = 1; j <= m.degree(); ++j) {
            out += (j > 1 ? " " : "");
            out += static_cast<char>('0' + m.at(i, j));
          }
          out += '\n';
        }
        break;
      }
    }
    return out;
  }

  namespace detail {
    class ElementParser {
     public:
      explicit ElementParser(std::string_view text) : _text(text) {}

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void expect(std::string_view token) {
        skip_space();
        if (_text.substr(_pos, token.size()) != token) {
          fail("expected '" + std::string(token) + "'");
        }
        _pos += token.size();
      }

      bool accept(char c) {
        if (peek() == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      int integer() {
        skip_space();
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        if (_pos - start > 9) {
          _pos = start;
          fail("integer too large");
        }
        return std::stoi(std::string(_text.substr(start, _pos - start)));
      }

      //! "{a,b,...}" with possibly empty contents.
      std::vector<int> brace_list() {
        expect("{");
        std::vector<int> out;
        if (accept('}')) {
          return out;
        }
        do {
          out.push_back(integer());
        } while (accept(','));
        expect("}");
        return out;
      }

      void finish() {
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
      }

      std::size_t position() const noexcept {
        return _pos;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorCode::syntax_error, what, _pos);
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };

    inline PartialMap parse_twoline(ElementParser& p, int n) {
      p.expect("[");
      auto domain_pos = p.position();
      auto domain     = p.brace_list();
      p.expect("->");
      auto image = p.brace_list();
      p.expect("]");
      p.finish();
      for (std::size_t i = 1; i < domain.size(); ++i) {
        if (domain[i - 1] >= domain[i]) {
          throw Error(ErrorCode::syntax_error,
                      "domain must be strictly increasing", domain_pos);
        }
      }
      if (domain.size() != image.size()) {
        throw Error(ErrorCode::syntax_error,
                    "domain and image have different lengths",
                    p.position());
      }
      std::vector<PartialMap::Pair> pairs;
      for (std::size_t i = 0; i < domain.size(); ++i) {
        pairs.emplace_back(domain[i], image[i]);
      }
      return PartialMap(n, std::move(pairs));
    }

    inline PartialMap parse_pairs(ElementParser& p, int n) {
      p.expect("{");
      std::vector<PartialMap::Pair> pairs;
      if (!p.accept('}')) {
        do {
          p.expect("(");
          int s = p.integer();
          p.expect(",");
          int t = p.integer();
          p.expect(")");
          pairs.emplace_back(s, t);
        } while (p.accept(','));
        p.expect("}");
      }
      p.finish();
      return PartialMap(n, std::move(pairs));
    }

    inline PartialMap parse_matrix(ElementParser& p, int n) {
      std::vector<std::uint8_t> entries;
      while (p.peek() != '\0') {
        int v = p.integer();
        if (v > 1) {
          p.fail("matrix entries must be 0 or 1");
        }
        entries.push_back(static_cast<std::uint8_t>(v));
      }
      return from_matrix(RookMatrix(n, std::move(entries)));
    }
  }  // namespace detail

  //! Parses any of the three printed styles, detected from the first
  //! character. The image list of the bracket form must consist of distinct
  //! values but need not be increasing, so every element of the rook monoid
  //! can be written.
  inline PartialMap parse_element(std::string_view text, int n) {
    validate_degree(n);
    detail::ElementParser p(text);
    switch (p.peek()) {
      case '[': return detail::parse_twoline(p, n);
      case '{': return detail::parse_pairs(p, n);
      case '0':
      case '1': return detail::parse_matrix(p, n);
      case '\0':
        if (n == 0) {
          return PartialMap(0);
        }
        [[fallthrough]];
      default: p.fail("expected '[', '{' or a matrix row");
    }
  }

}  // namespace rook

#endif  // ROOK_ELEMENT_IO_HPP_

#ifndef ROOK_JSON_IO_HPP_
#define ROOK_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "integer.hpp"
#include "module.hpp"
#include "partial_map.hpp"
#include "presentation.hpp"
#include "subset.hpp"

// JSON forms of the library types. Big integers are decimal strings so that
// no precision is lost in consumers with 53-bit numbers.

namespace rook::json {

  using nlohmann::json;

  inline json big(BigInt const& x) {
    return to_decimal(x);
  }

  inline json subset(Subset const& s) {
    return s.elements();
  }

  inline Subset subset_from(json const& j, int n) {
    if (!j.is_array()) {
      throw Error(ErrorCode::syntax_error, "subset must be a JSON array");
    }
    Subset s(n);
    for (auto const& x : j) {
      if (!x.is_number_integer()) {
        throw Error(ErrorCode::syntax_error, "subset entries must be integers");
      }
      s.insert(x.get<int>());
    }
    return s;
  }

  inline json family(std::vector<Subset> const& sets) {
    json out = json::array();
    for (auto const& s : sets) {
      out.push_back(subset(s));
    }
    return out;
  }

  inline json element(PartialMap const& f) {
    return {{"domain", subset(f.domain())}, {"range", subset(f.range())}};
  }

  //! {"S": [...], "T": [...]}
  inline json standard_word(StandardWord const& w) {
    return {{"S", subset(w.S())}, {"T", subset(w.T())}};
  }

  inline StandardWord standard_word_from(json const& j, int n) {
    if (!j.is_object() || !j.contains("S") || !j.contains("T")) {
      throw Error(ErrorCode::syntax_error, "expected an object with S and T");
    }
    return StandardWord(subset_from(j["S"], n), subset_from(j["T"], n));
  }

  //! [{"subset": [...], "numerator": "p", "denominator": "q"}, ...]
  inline json vector(ModuleVector const& v) {
    json out = json::array();
    for (auto const& [s, c] : v.terms()) {
      out.push_back({{"subset", subset(s)},
                     {"numerator", big(numerator(c))},
                     {"denominator", big(denominator(c))}});
    }
    return out;
  }

  inline ModuleVector vector_from(json const& j, int n) {
    if (!j.is_array()) {
      throw Error(ErrorCode::syntax_error, "vector must be a JSON array");
    }
    ModuleVector v(n);
    for (auto const& term : j) {
      if (!term.is_object() || !term.contains("subset")
          || !term.contains("numerator") || !term.contains("denominator")) {
        throw Error(ErrorCode::syntax_error,
                    "vector terms need subset, numerator and denominator");
      }
      BigInt num(term["numerator"].get<std::string>());
      BigInt den(term["denominator"].get<std::string>());
      if (den == 0) {
        throw Error(ErrorCode::syntax_error, "zero denominator");
      }
      v.add(subset_from(term["subset"], n), Rational(num, den));
    }
    return v;
  }

  inline json summands(std::vector<BranchSummand> const& list) {
    json out = json::array();
    for (auto const& s : list) {
      out.push_back({{"family", std::string(to_string(s.family))},
                     {"m", s.m},
                     {"k", s.k},
                     {"multiplicity", big(s.multiplicity)},
                     {"dimension", big(s.dimension)}});
    }
    return out;
  }

}  // namespace rook::json

#endif  // ROOK_JSON_IO_HPP_

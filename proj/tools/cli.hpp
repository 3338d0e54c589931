#ifndef ROOK_TOOLS_CLI_HPP_
#define ROOK_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rook/rook.hpp"

namespace rook::cli {

  using Json = nlohmann::json;

  inline constexpr int exit_ok     = 0;
  inline constexpr int exit_domain = 1;
  inline constexpr int exit_usage  = 2;

  struct Options {
    std::string format = "text";
    int         n      = 0;
    std::string subset;
    std::string vector;
    std::string basis;
    std::string element;
    std::string sequence;
    std::string style = "twoline";
    std::string word;
    std::string suite = "all";
    int         m     = 1;
    int         k     = 2;
    int         l     = 1;
    int         even  = 0;
    bool        compute = false;
    bool        small   = false;
    int         nmax    = -1;
    int         kmax    = -1;
    std::uint64_t seed  = VerifyOptions{}.seed;
  };

  namespace detail {
    inline bool as_json(Options const& o) {
      return o.format == "json";
    }

    inline void emit(std::ostream& out, Json const& j) {
      out << j.dump() << '\n';
    }

    inline ElementStyle style_of(std::string const& s) {
      if (s == "pairs") {
        return ElementStyle::pairs;
      }
      if (s == "matrix") {
        return ElementStyle::matrix;
      }
      return ElementStyle::twoline;
    }

    // The vector given by --vector, or v_S for --subset.
    inline ModuleVector input_vector(Options const& o, CLI::App const& cmd) {
      if (cmd.count("--vector") > 0) {
        return parse_vector(o.vector, o.n);
      }
      return ModuleVector::basis(parse_subset(o.subset, o.n));
    }

    inline void print_family(std::ostream& out, SubsetFamily const& sets) {
      for (auto const& s : sets) {
        out << to_string(s) << '\n';
      }
    }

    inline std::string summand_text(BranchSummand const& s) {
      std::string label = s.family == SummandFamily::consecutive ? "W" : "S";
      return to_decimal(s.multiplicity) + " x " + label + "(m=" +
             std::to_string(s.m) + ",k=" + std::to_string(s.k) + ") dim " +
             to_decimal(s.dimension);
    }

    inline int do_order(Options const& o, std::ostream& out) {
      auto b = order_recursive(o.n);
      if (as_json(o)) {
        emit(out, {{"n", o.n}, {"order", json::big(b)}});
      } else {
        out << b << '\n';
      }
      return exit_ok;
    }

    inline int do_enumerate(Options const& o, std::ostream& out) {
      auto const style = style_of(o.style);
      if (as_json(o)) {
        Json elements = Json::array();
        for_each_Bn(o.n, [&elements](PartialMap const& f) {
          elements.push_back(json::element(f));
        });
        emit(out,
             {{"n", o.n},
              {"order", json::big(order_Bn(o.n))},
              {"elements", elements}});
        return exit_ok;
      }
      bool first = true;
      for_each_Bn(o.n, [&](PartialMap const& f) {
        if (style == ElementStyle::matrix && !first) {
          out << '\n';
        }
        out << print_element(f, style);
        if (style != ElementStyle::matrix) {
          out << '\n';
        }
        first = false;
      });
      return exit_ok;
    }

    inline int do_ballot(Options const& o, CLI::App const& cmd,
                         std::ostream& out) {
      PartialMap     f;
      BallotSequence b(0, {1, -1});
      if (cmd.count("--sequence") > 0) {
        b = BallotSequence::parse(o.n, o.sequence);
        f = ballot_decode(b);
      } else {
        f = parse_element(o.element, o.n);
        b = ballot_encode(f);
      }
      if (as_json(o)) {
        emit(out,
             {{"n", o.n},
              {"sequence", b.str()},
              {"S", json::subset(f.domain())},
              {"T", json::subset(f.range())}});
      } else if (cmd.count("--sequence") > 0) {
        out << print_element(f, style_of(o.style));
        if (style_of(o.style) != ElementStyle::matrix) {
          out << '\n';
        }
      } else {
        out << b.str() << '\n';
      }
      return exit_ok;
    }

    inline int do_dim(Options const& o, CLI::App const& cmd,
                      std::ostream& out) {
      BigInt d;
      if (cmd.count("--vector") > 0) {
        d = dim_cyclic(parse_vector(o.vector, o.n));
      } else {
        d = dim_single(parse_subset(o.subset, o.n));
      }
      if (as_json(o)) {
        emit(out, {{"n", o.n}, {"dimension", json::big(d)}});
      } else {
        out << d << '\n';
      }
      return exit_ok;
    }

    inline int do_span(Options const& o, CLI::App const& cmd,
                       std::ostream& out) {
      auto basis = cyclic_span(input_vector(o, cmd));
      if (as_json(o)) {
        emit(out,
             {{"n", o.n},
              {"dimension", json::big(BigInt(basis.size()))},
              {"basis", json::family(basis)}});
      } else {
        print_family(out, basis);
      }
      return exit_ok;
    }

    inline int do_reduce(Options const& o, CLI::App const& cmd,
                         std::ostream& out) {
      ModuleVector g(o.n);
      if (cmd.count("--basis") > 0) {
        SubsetFamily family;
        std::size_t  offset = 0;
        std::string_view text = o.basis;
        while (true) {
          auto semi = text.find(';');
          auto item = text.substr(0, semi);
          auto at   = offset;
          if (!rook::detail::trim(item, at).empty()) {
            family.push_back(parse_subset(item, o.n, offset));
          }
          if (semi == text.npos) {
            break;
          }
          text.remove_prefix(semi + 1);
          offset += semi + 1;
        }
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        g = reduced_generator_of_span(o.n, family);
      } else {
        g = reduced_form(input_vector(o, cmd));
      }
      if (as_json(o)) {
        emit(out,
             {{"n", o.n},
              {"reduced_support", json::family(reduced_support(g).sets)},
              {"vector", json::vector(g)}});
      } else {
        out << format_vector(g) << '\n';
      }
      return exit_ok;
    }

    inline int do_decompose(Options const& o, CLI::App const& cmd,
                            std::ostream& out) {
      auto parts = decompose(input_vector(o, cmd));
      if (as_json(o)) {
        Json list = Json::array();
        for (auto const& p : parts) {
          list.push_back(
              {{"reduced_support", json::family(reduced_support(p).sets)},
               {"dimension", json::big(dim_cyclic(p))}});
        }
        emit(out, {{"n", o.n}, {"summands", list}});
      } else {
        for (auto const& p : parts) {
          out << format_vector(p) << "  dim " << dim_cyclic(p) << '\n';
        }
      }
      return exit_ok;
    }

    inline int do_branch(Options const& o, CLI::App const& cmd,
                         std::ostream& out) {
      std::vector<BranchSummand> summands;
      if (cmd.count("--even") > 0) {
        summands = o.compute ? branch_even_compute(o.even) : branch_even(o.even);
      } else {
        summands = o.compute ? branch_compute(o.m, o.k, o.l)
                             : branch_predict(o.m, o.k, o.l);
      }
      if (as_json(o)) {
        emit(out, {{"summands", json::summands(summands)}});
      } else {
        for (auto const& s : summands) {
          out << summand_text(s) << '\n';
        }
      }
      return exit_ok;
    }

    inline int do_rewrite(Options const& o, std::ostream& out) {
      auto const w  = parse_word(o.word, o.n);
      auto const sw = rewrite(w);
      Json       j  = json::standard_word(sw);
      if (as_json(o)) {
        j["n"]    = o.n;
        j["word"] = to_string(expand_std(sw));
      }
      emit(out, j);
      return exit_ok;
    }

    inline int do_verify(Options const& o, std::ostream& out) {
      VerifyOptions vo;
      vo.small = o.small;
      vo.seed  = o.seed;
      if (o.nmax >= 0) {
        vo.nmax = o.nmax;
      }
      if (o.kmax >= 0) {
        vo.kmax = o.kmax;
      }
      auto const results = verify(o.suite, vo);
      bool const ok      = std::all_of(
          results.begin(), results.end(), [](auto& r) { return r.passed(); });
      if (as_json(o)) {
        Json rows = Json::array();
        for (auto const& r : results) {
          rows.push_back({{"suite", r.suite},
                          {"check", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"passed", r.passed()}});
        }
        emit(out, {{"passed", ok}, {"checks", rows}});
      } else {
        for (auto const& r : results) {
          out << (r.passed() ? "PASS" : "FAIL") << "  " << std::left
              << std::setw(11) << r.suite << std::setw(40) << r.name
              << std::right << std::setw(8) << r.cases << " cases  "
              << r.failures << " failures\n";
        }
        out << (ok ? "all checks passed" : "some checks failed") << '\n';
      }
      return ok ? exit_ok : exit_domain;
    }
  }  // namespace detail

  //! Runs the command line `args` (without the program name). Results go to
  //! `out`, diagnostics to `err`; returns the exit code.
  inline int run(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    Options  o;
    CLI::App app{"Computations in the planar upper triangular rook monoid",
                 "rook"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    auto add_n = [&o](CLI::App* cmd) {
      cmd->add_option("--n", o.n, "Degree")->required();
    };
    auto add_vector = [&o](CLI::App* cmd) {
      auto* s = cmd->add_option("--subset", o.subset,
                                "Subset, e.g. 2,4 (empty for the empty set)");
      auto* v = cmd->add_option("--vector", o.vector,
                                "Vector, e.g. \"1:2,4; -1/2:1,3\"");
      s->excludes(v);
      return std::pair{s, v};
    };

    auto* order = app.add_subcommand("order", "Order of B_n");
    add_n(order);

    auto* enumerate = app.add_subcommand("enumerate", "List the elements of B_n");
    add_n(enumerate);
    enumerate->add_option("--style", o.style, "Element style")
        ->check(CLI::IsMember({"twoline", "pairs", "matrix"}));

    auto* ballot
        = app.add_subcommand("ballot", "Encode an element or decode a sequence");
    add_n(ballot);
    auto* be = ballot->add_option("--element", o.element, "Element of B_n");
    auto* bs = ballot->add_option("--sequence", o.sequence,
                                  "Ballot sequence, 1 for +1 and 0 for -1");
    be->excludes(bs);
    ballot->add_option("--style", o.style, "Element style for decoding")
        ->check(CLI::IsMember({"twoline", "pairs", "matrix"}));

    auto* dim = app.add_subcommand("dim", "Dimension of a cyclic submodule");
    add_n(dim);
    add_vector(dim);

    auto* span = app.add_subcommand("span", "Basis of a cyclic submodule");
    add_n(span);
    add_vector(span);

    auto* reduce = app.add_subcommand("reduce", "Reduced generator");
    add_n(reduce);
    auto [rs, rv] = add_vector(reduce);
    auto* rb = reduce->add_option("--basis", o.basis,
                                  "Submodule basis, e.g. \"1,2; 1,3\" ({} for the empty set)");
    rb->excludes(rs)->excludes(rv);

    auto* decomp = app.add_subcommand("decompose", "Indecomposable summands");
    add_n(decomp);
    add_vector(decomp);

    auto* branch = app.add_subcommand("branch", "Branching rules");
    branch->add_option("--m", o.m, "Offset m");
    branch->add_option("--k", o.k, "Cardinality k");
    branch->add_option("--l", o.l, "Restriction parameter l");
    branch->add_option("--even", o.even, "Restrict W_k of the even subset");
    branch->add_flag("--compute", o.compute,
                     "Group the basis directly instead of using the rule");

    auto* rewrite_cmd
        = app.add_subcommand("rewrite", "Standard word of a generator word");
    add_n(rewrite_cmd);
    rewrite_cmd->add_option("word", o.word, "Word such as \"l1 e3 l2\"")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run self-checks");
    std::vector<std::string> suites = {"all"};
    for (auto s : verify_suites()) {
      suites.emplace_back(s);
    }
    verify_cmd->add_option("suite", o.suite, "Suite")
        ->check(CLI::IsMember(suites));
    verify_cmd->add_flag("--small", o.small, "Reduced bounds");
    verify_cmd->add_option("--nmax", o.nmax, "Degree bound")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--kmax", o.kmax, "Cardinality bound")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", o.seed, "Seed for random sweeps");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    try {
      if (order->parsed()) {
        return detail::do_order(o, out);
      }
      if (enumerate->parsed()) {
        return detail::do_enumerate(o, out);
      }
      if (ballot->parsed()) {
        if (ballot->count("--element") + ballot->count("--sequence") == 0) {
          err << "ballot: one of --element or --sequence is required\n";
          return exit_usage;
        }
        return detail::do_ballot(o, *ballot, out);
      }
      for (auto* cmd : {dim, span, decomp}) {
        if (cmd->parsed() && cmd->count("--subset") + cmd->count("--vector") == 0) {
          err << cmd->get_name()
              << ": one of --subset or --vector is required\n";
          return exit_usage;
        }
      }
      if (dim->parsed()) {
        return detail::do_dim(o, *dim, out);
      }
      if (span->parsed()) {
        return detail::do_span(o, *span, out);
      }
      if (reduce->parsed()) {
        if (reduce->count("--subset") + reduce->count("--vector")
                + reduce->count("--basis")
            == 0) {
          err << "reduce: one of --subset, --vector or --basis is required\n";
          return exit_usage;
        }
        return detail::do_reduce(o, *reduce, out);
      }
      if (decomp->parsed()) {
        return detail::do_decompose(o, *decomp, out);
      }
      if (branch->parsed()) {
        return detail::do_branch(o, *branch, out);
      }
      if (rewrite_cmd->parsed()) {
        return detail::do_rewrite(o, out);
      }
      return detail::do_verify(o, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_domain;
    }
  }

}  // namespace rook::cli

#endif  // ROOK_TOOLS_CLI_HPP_

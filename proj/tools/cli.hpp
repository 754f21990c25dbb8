#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "ratcat/ratcat.hpp"
#include "ratcat/verify.hpp"

namespace ratcat::cli {

using Json = nlohmann::ordered_json;

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;

inline Json word_to_json(const MarkedRankWord& word) {
  Json entries = Json::array();
  for (const auto& e : word.entries()) {
    entries.push_back(Json{{"rank", e.rank}, {"color", e.color}, {"boxed", e.boxed}});
  }
  return Json{{"n", word.n()}, {"entries", std::move(entries)}, {"text", render_word(word)}};
}

// [{"q": i, "t": j, "c": coeff}, ...] in graded-lex order.
inline Json poly_to_json(const QtPolynomial& p) {
  Json terms = Json::array();
  for (const Term& term : p.terms()) {
    terms.push_back(Json{{"q", term.exponents.q}, {"t", term.exponents.t}, {"c", term.coefficient}});
  }
  return terms;
}

inline Json triple_to_json(const StatTriple& t) {
  return Json{{"area", t.area}, {"skips", t.skips}, {"dinv", t.dinv}};
}

inline std::string triple_text(const StatTriple& t) {
  return "area=" + std::to_string(t.area) + " skips=" + std::to_string(t.skips) +
         " dinv=" + std::to_string(t.dinv);
}

inline Json heights_to_json(const DyckPath& p) {
  return Json(std::vector<int>(p.east_heights().begin(), p.east_heights().end()));
}

/**
 * Runs the command line front end. Output goes to `out`, diagnostics to `err`.
 * Returns 0 on success, 1 when verify finds a failing property and 2 on any
 * usage or validation error.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational (3,n)-Dyck path statistics, rank words and q,t-Catalan polynomials", "ratcat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string path_word;
  int m = 0;
  int n = 0;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every (m,n)-Dyck path in lexicographic order");
  enumerate_cmd->add_option("m", m)->required();
  enumerate_cmd->add_option("n", n)->required();

  auto* stats_cmd = app.add_subcommand("stats", "Statistics of a path given as an N/E step word");
  stats_cmd->add_option("path", path_word)->required();

  auto* rankword_cmd = app.add_subcommand("rankword", "Marked rank word of a (3,n)-path, or the bare word of L(3,n)");
  auto* rankword_path = rankword_cmd->add_option("path", path_word);
  auto* rankword_n = rankword_cmd->add_option("--n", n, "Print the unmarked rank word for this n");
  rankword_path->excludes(rankword_n);

  int a = 0;
  int s = 0;
  int d = 0;
  auto* omega_cmd = app.add_subcommand("omega", "Rebuild the marked rank word for (area, skips, dinv)");
  omega_cmd->add_option("area", a)->required();
  omega_cmd->add_option("skips", s)->required();
  omega_cmd->add_option("dinv", d)->required();

  std::string method = "brute";
  auto* poly_cmd = app.add_subcommand("poly", "q,t-Catalan polynomial C(m,n)");
  poly_cmd->add_option("m", m)->required();
  poly_cmd->add_option("n", n)->required();
  poly_cmd->add_option("--method", method, "brute: sum over paths; closed: closed form (m=3)")
      ->check(CLI::IsMember({"brute", "closed"}));

  auto* bijection_cmd = app.add_subcommand("bijection", "Image of a (3,n)-path under the area/dinv exchange");
  bijection_cmd->add_option("path", path_word)->required();

  auto* transpose_cmd = app.add_subcommand("transpose", "Complementary (n,m)-path");
  transpose_cmd->add_option("path", path_word)->required();

  VerifyOptions verify_options;
  bool perturb_dinv = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check every property up to the given sizes");
  verify_cmd->add_option("--max-n", verify_options.max_n, "Largest n for (3,n) checks")
      ->check(CLI::Range(1, 200));
  verify_cmd->add_option("--max-mn", verify_options.max_mn, "Largest m+n for general (m,n) checks")
      ->check(CLI::Range(2, 26));
  // Harness self-test: add one to every dinv value; verify must then fail.
  verify_cmd->add_flag("--perturb-dinv", perturb_dinv)->group("");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ratcat");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const bool json = format == "json";

  try {
    if (*enumerate_cmd) {
      Json list = Json::array();
      for_each_path(m, n, [&](const DyckPath& p) {
        if (json) {
          list.push_back(Json{{"path", render_path(p)},
                              {"east_heights", heights_to_json(p)},
                              {"area", area(p)},
                              {"dinv", dinv(p)}});
        } else {
          out << render_path(p) << '\n';
        }
      });
      if (json) out << list.dump(2) << '\n';
      return kOk;
    }

    if (*stats_cmd) {
      const DyckPath p = parse_path(path_word);
      const bool three = p.m() == 3;
      if (json) {
        Json doc{{"path", render_path(p)}, {"m", p.m()}, {"n", p.n()}, {"area", area(p)}, {"dinv", dinv(p)}};
        if (three) {
          doc["skips"] = skips(p);
          doc["rank_word"] = word_to_json(mark_from_path(p));
        }
        out << doc.dump(2) << '\n';
      } else {
        out << "path " << render_path(p) << '\n'
            << "m " << p.m() << '\n'
            << "n " << p.n() << '\n'
            << "area " << area(p) << '\n'
            << "dinv " << dinv(p) << '\n';
        if (three) {
          out << "skips " << skips(p) << '\n' << "rank_word " << render_word(mark_from_path(p)) << '\n';
        }
      }
      return kOk;
    }

    if (*rankword_cmd) {
      if (!*rankword_n && !*rankword_path) {
        err << "error: rankword needs a path or --n\n";
        return kUsageError;
      }
      const MarkedRankWord word = *rankword_n ? lattice_rank_word(n) : mark_from_path(parse_path(path_word));
      if (json) out << word_to_json(word).dump(2) << '\n';
      else out << render_word(word) << '\n';
      return kOk;
    }

    if (*omega_cmd) {
      const MarkedRankWord word = omega(a, s, d);
      const DyckPath p = path_from_word(word);
      if (json) {
        out << Json{{"triple", triple_to_json(StatTriple{a, s, d})},
                    {"rank_word", word_to_json(word)},
                    {"path", render_path(p)}}
                   .dump(2)
            << '\n';
      } else {
        out << "rank_word " << render_word(word) << '\n' << "path " << render_path(p) << '\n';
      }
      return kOk;
    }

    if (*poly_cmd) {
      QtPolynomial poly;
      if (method == "closed") {
        if (m != 3) throw Error(ErrorKind::UnsupportedM, "closed form needs m=3, got m=" + std::to_string(m));
        poly = catalan3_closed_form(n);
      } else {
        poly = catalan_bruteforce(m, n);
      }
      if (json) out << poly_to_json(poly).dump(2) << '\n';
      else out << render(poly) << '\n';
      return kOk;
    }

    if (*bijection_cmd) {
      const DyckPath p = parse_path(path_word);
      const DyckPath image = involution(p);
      const StatTriple before = stat_triple(p);
      const StatTriple after = stat_triple(image);
      if (json) {
        out << Json{{"path", render_path(p)},
                    {"triple", triple_to_json(before)},
                    {"image", render_path(image)},
                    {"image_triple", triple_to_json(after)}}
                   .dump(2)
            << '\n';
      } else {
        out << "path " << render_path(p) << '\n'
            << "triple " << triple_text(before) << '\n'
            << "image " << render_path(image) << '\n'
            << "image_triple " << triple_text(after) << '\n';
      }
      return kOk;
    }

    if (*transpose_cmd) {
      const DyckPath t = transpose(parse_path(path_word));
      if (json) {
        out << Json{{"path", render_path(t)}, {"m", t.m()}, {"n", t.n()}, {"east_heights", heights_to_json(t)}}
                   .dump(2)
            << '\n';
      } else {
        out << render_path(t) << '\n';
      }
      return kOk;
    }

    if (*verify_cmd) {
      if (perturb_dinv) verify_options.dinv_of = [](const DyckPath& p) { return dinv(p) + 1; };
      const VerifyReport report = verify(verify_options);
      std::size_t failing = 0;
      for (const auto& c : report.checks) failing += c.failed > 0 ? 1 : 0;
      if (json) {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
          checks.push_back(Json{{"name", c.name},
                                {"passed", c.passed},
                                {"failed", c.failed},
                                {"counterexample", c.first_counterexample}});
        }
        out << Json{{"max_n", verify_options.max_n},
                    {"max_mn", verify_options.max_mn},
                    {"ok", report.ok()},
                    {"checks", std::move(checks)}}
                   .dump(2)
            << '\n';
      } else {
        for (const auto& c : report.checks) {
          out << (c.failed ? "FAIL " : "PASS ") << c.name << ' ' << c.passed << '/' << (c.passed + c.failed);
          if (c.failed) out << "  first counterexample: " << c.first_counterexample;
          out << '\n';
        }
        out << "summary: " << report.checks.size() << " checks, " << failing << " failed\n";
      }
      return report.ok() ? kOk : kPropertyFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  return kUsageError;
}

}  // namespace ratcat::cli

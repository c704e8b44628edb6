#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "glab/boundary/growth.hpp"
#include "glab/boundary/metric.hpp"
#include "glab/cayley/bfs.hpp"
#include "glab/error.hpp"
#include "glab/groups/catalog.hpp"
#include "glab/lab/checks.hpp"
#include "glab/lab/constructors.hpp"

namespace {

using namespace glab;

void warn_small_p(std::uint32_t p) {
  if (p != 0 && p < 20) {
    std::cerr << "warning: p = " << p << " < 20; the distance estimates for G_p assume p >= 20\n";
  }
}

AnyGroup open_group(const std::string& id) {
  auto group = make_group(id);
  if (id.rfind("gp:", 0) == 0) warn_small_p(group_p(group));
  return group;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
  std::vector<std::uint64_t> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad c grid entry '" + item + "'");
    }
  }
  if (grid.empty()) throw ParseError("empty c grid");
  return grid;
}

BallOptions ball_options(std::uint32_t radius, std::uint64_t cap, unsigned threads) {
  BallOptions options;
  options.radius = radius;
  options.memory_cap = cap;
  options.threads = threads;
  return options;
}

void require_complete(const Ball& ball) {
  if (!ball.complete()) {
    throw BallError("ball hit the memory cap at " + std::to_string(ball.size()) +
                    " entries; raise --cap or lower --radius");
  }
}

struct Common {
  std::string group;
  std::uint32_t radius = 0;
  std::uint64_t cap = kDefaultMemoryCap;
  unsigned threads = 0;
};

void add_ball_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--group", c.group, "zd:N, free:N, bs:P, gp:P, h2 or h")->required();
  cmd->add_option("--radius", c.radius, "ball radius")->required();
  cmd->add_option("--cap", c.cap, "maximum ball entries");
  cmd->add_option("--threads", c.threads, "worker threads (0: all, capped by GLAB_THREADS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glab: exact word problems, Cayley balls and growth for BS(1,p), G_p and H"};
  app.require_subcommand(1);

  // group eval | equal
  auto* group_cmd = app.add_subcommand("group", "evaluate or compare words");
  group_cmd->require_subcommand(1);
  std::string group_id;
  std::vector<std::string> words;
  auto* eval_cmd = group_cmd->add_subcommand("eval", "print the canonical form of a word");
  auto* equal_cmd = group_cmd->add_subcommand("equal", "decide whether two words are equal");
  for (auto* cmd : {eval_cmd, equal_cmd}) {
    cmd->add_option("--group", group_id, "group id")->required();
    cmd->add_option("--word", words, "word; give it twice for equal")->required();
  }

  // ball
  Common ball_args;
  std::string ball_out;
  auto* ball_cmd = app.add_subcommand("ball", "breadth-first ball around the identity");
  add_ball_flags(ball_cmd, ball_args);
  ball_cmd->add_option("--out", ball_out, "write the ball to FILE");

  // dist
  std::string ball_file;
  std::string dist_word;
  auto* dist_cmd = app.add_subcommand("dist", "word length of an element from a saved ball");
  dist_cmd->add_option("--ball", ball_file, "ball file")->required();
  dist_cmd->add_option("--word", dist_word, "word")->required();

  // growth
  Common growth_args;
  std::string element;
  std::string csv_file;
  std::string distortion_file;
  std::int64_t power_bound = -1;
  auto* growth_cmd = app.add_subcommand("growth", "orbit growth table w_g(n)");
  add_ball_flags(growth_cmd, growth_args);
  growth_cmd->add_option("--element", element, "word for g")->required();
  growth_cmd->add_option("--csv", csv_file, "write the n,w table to FILE (default: stdout)");
  growth_cmd->add_option("--distortion", distortion_file, "write the r,delta table to FILE");
  growth_cmd->add_option("--power-bound", power_bound, "scan |i| <= bound (default: ball size)");

  // cone
  Common cone_args;
  std::string cone_g;
  std::string cone_v;
  std::string cone_alpha = "0";
  std::uint64_t cone_c = 0;
  std::int64_t cone_n = 0;
  auto* cone_cmd = app.add_subcommand("cone", "is v in the cone around the orbit of g");
  add_ball_flags(cone_cmd, cone_args);
  cone_cmd->add_option("--g", cone_g, "word for g")->required();
  cone_cmd->add_option("--v", cone_v, "word for v")->required();
  cone_cmd->add_option("--alpha", cone_alpha, "alpha as p/q or decimal")->required();
  cone_cmd->add_option("--c", cone_c, "additive constant");
  cone_cmd->add_option("--n-max", cone_n, "largest n tried (default: 2 radius + 2)");

  // estimate-s, antipodal
  Common est_args;
  std::string est_g;
  std::string est_h;
  std::int64_t est_range = 12;
  std::string est_grid = "0,1,2,3,4,5";
  std::string est_json;
  std::int64_t est_bound = -1;
  auto* est_cmd = app.add_subcommand("estimate-s", "lower-bound certificate for s(g, h)");
  est_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  auto* anti_cmd = app.add_subcommand("antipodal", "estimate-s with h = g^-1");
  for (auto* cmd : {est_cmd, anti_cmd}) {
    add_ball_flags(cmd, est_args);
    cmd->add_option("--g", est_g, "word for g")->required();
    cmd->add_option("--range", est_range, "I: powers g^i with 1 <= i <= I");
    cmd->add_option("--c-grid", est_grid, "comma separated c values");
    cmd->add_option("--json", est_json, "write the estimate to FILE (default: stdout)");
    cmd->add_option("--power-bound", est_bound, "partner powers scanned (default: ball size)");
  }
  est_cmd->add_option("--h", est_h, "word for h")->required();

  // paper
  auto* paper_cmd = app.add_subcommand("paper", "explicit words and the check report");
  paper_cmd->require_subcommand(1);
  std::uint32_t paper_p = 20;
  std::string config_file;
  std::string report_file;
  std::vector<std::string> only;
  std::uint64_t seed = 0;
  bool text_report = false;
  auto* check_cmd = paper_cmd->add_subcommand("check-all", "run every check and write a report");
  auto* p_opt = check_cmd->add_option("--p", paper_p, "p for the G_p checks");
  check_cmd->add_option("--config", config_file, "JSON config file");
  check_cmd->add_option("--report", report_file, "write the JSON report to FILE");
  check_cmd->add_option("--only", only, "run only these check ids")->delimiter(',');
  auto* seed_opt = check_cmd->add_option("--seed", seed, "random seed");
  check_cmd->add_flag("--text", text_report, "print the text summary even with --report");
  auto* list_cmd = paper_cmd->add_subcommand("list", "list check ids");
  std::uint64_t word_k = 0;
  auto* wk_cmd = paper_cmd->add_subcommand("wk", "w_k over {a, t}");
  auto* wkp_cmd = paper_cmd->add_subcommand("wkprime", "w'_k over the letters a_i");
  auto* sk_cmd = paper_cmd->add_subcommand("sk", "short word for s^k in H");
  auto* g1g2_cmd = paper_cmd->add_subcommand("g1g2", "short word for g1^-k g2^k in H");
  for (auto* cmd : {wk_cmd, wkp_cmd, sk_cmd, g1g2_cmd}) {
    cmd->add_option("K", word_k, "index")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; bad usage is bad input.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group_cmd->parsed()) {
      auto group = open_group(group_id);
      const bool equal = equal_cmd->parsed();
      if (words.size() != (equal ? 2U : 1U)) {
        throw ParseError(equal ? "equal needs --word twice" : "eval takes one --word");
      }
      return std::visit(
          [&](const auto& g) {
            auto u = evaluate(g, parse_word(words[0], g.alphabet()));
            if (!equal) {
              std::cout << g.canonical_key(u) << "\n";
              return 0;
            }
            auto v = evaluate(g, parse_word(words[1], g.alphabet()));
            const bool same = u == v;
            std::cout << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
          },
          group);
    }

    if (ball_cmd->parsed()) {
      auto group = open_group(ball_args.group);
      Ball ball = std::visit(
          [&](const auto& g) {
            return build_ball(g, ball_options(ball_args.radius, ball_args.cap, ball_args.threads));
          },
          group);
      std::cout << "group " << ball.group_id() << " radius " << ball.radius() << " entries "
                << ball.size() << (ball.complete() ? "" : " (truncated at cap)") << "\nspheres";
      for (auto s : ball.sphere_sizes()) std::cout << ' ' << s;
      std::cout << "\n";
      if (!ball_out.empty()) save_ball(ball, ball_out);
      return 0;
    }

    if (dist_cmd->parsed()) {
      Ball ball = load_ball(ball_file);
      auto group = make_group(ball.group_id());
      auto q = std::visit([&](const auto& g) { return distance(ball, g, evaluate(g, parse_word(dist_word, g.alphabet()))); },
                          group);
      if (q.within_radius) {
        std::cout << q.distance << "\n";
      } else {
        std::cout << ">" << q.distance << "\n";
      }
      return 0;
    }

    if (growth_cmd->parsed()) {
      auto group = open_group(growth_args.group);
      std::visit(
          [&](const auto& g) {
            Ball ball = build_ball(g, ball_options(growth_args.radius, growth_args.cap, growth_args.threads));
            require_complete(ball);
            auto x = evaluate(g, parse_word(element, g.alphabet()));
            auto scan = scan_powers(g, x, ball, power_bound);
            auto table = growth_from_scan(scan, ball, element);
            if (scan.partial) std::cerr << "warning: " << scan.note << "\n";
            if (csv_file.empty()) {
              std::cout << to_csv(table);
            } else {
              write_text(csv_file, to_csv(table));
            }
            if (!distortion_file.empty()) {
              write_text(distortion_file, to_csv(distortion_from_scan(scan, ball, element)));
            }
          },
          group);
      return 0;
    }

    if (cone_cmd->parsed()) {
      auto group = open_group(cone_args.group);
      ConeParams params{parse_rational(cone_alpha), cone_c};
      const std::int64_t n_max = cone_n > 0 ? cone_n : 2 * static_cast<std::int64_t>(cone_args.radius) + 2;
      auto result = std::visit(
          [&](const auto& g) {
            Ball ball = build_ball(g, ball_options(cone_args.radius, cone_args.cap, cone_args.threads));
            require_complete(ball);
            return cone_contains(g, evaluate(g, parse_word(cone_g, g.alphabet())), params,
                                 evaluate(g, parse_word(cone_v, g.alphabet())), ball, n_max);
          },
          group);
      std::cout << to_string(result.status);
      if (result.witness) std::cout << " n=" << *result.witness;
      if (!result.unresolved.empty()) std::cout << " (" << result.unresolved.size() << " n undecided)";
      std::cout << "\n";
      return 0;
    }

    if (est_cmd->parsed() || anti_cmd->parsed()) {
      auto group = open_group(est_args.group);
      auto grid = parse_grid(est_grid);
      auto estimate = std::visit(
          [&](const auto& g) {
            Ball ball = build_ball(g, ball_options(est_args.radius, est_args.cap, est_args.threads));
            require_complete(ball);
            auto x = evaluate(g, parse_word(est_g, g.alphabet()));
            if (anti_cmd->parsed()) return antipodal_lower_bound(g, x, ball, est_range, grid, est_g, est_bound);
            auto y = evaluate(g, parse_word(est_h, g.alphabet()));
            return estimate_s(g, x, y, ball, est_range, grid, est_g, est_h, est_bound);
          },
          group);
      if (est_json.empty()) {
        std::cout << to_json(estimate) << "\n";
      } else {
        write_text(est_json, to_json(estimate) + "\n");
      }
      return 0;
    }

    if (paper_cmd->parsed()) {
      if (list_cmd->parsed()) {
        for (const auto& id : lab::check_ids()) std::cout << id << "\n";
        return 0;
      }
      if (check_cmd->parsed()) {
        lab::LabConfig config;
        if (!config_file.empty()) {
          std::ifstream in(config_file);
          if (!in) throw Error("cannot read '" + config_file + "'");
          nlohmann::json j;
          try {
            j = nlohmann::json::parse(in);
          } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad config JSON: ") + e.what());
          }
          config = lab::LabConfig::from_json(j);
        }
        if (p_opt->count() > 0) config.p = paper_p;
        if (seed_opt->count() > 0) config.seed = seed;
        if (config.p < 2) throw ParseError("p must be at least 2");
        warn_small_p(config.p);
        auto report = lab::run_all(config, only);
        if (!report_file.empty()) write_text(report_file, report.to_json().dump(2) + "\n");
        if (report_file.empty() || text_report) std::cout << report.to_text();
        return report.all_passed() ? 0 : 1;
      }
      const Alphabet gp_alphabet({"a", "t"});
      const Alphabet h_alphabet({"a", "s", "t", "x"});
      if (wk_cmd->parsed() || wkp_cmd->parsed()) {
        if (word_k > 24) throw DomainError("K > 24 gives words of more than 10^8 letters");
        const auto k = static_cast<std::uint32_t>(word_k);
        if (wk_cmd->parsed()) {
          auto w = lab::build_wk(k);
          std::cout << format_word(w, gp_alphabet) << "\nlength " << word_length(w) << "\n";
        } else {
          auto w = lab::build_wk_prime(k);
          std::cout << format_indexed(w) << "\nlength " << word_length(w) << "\n";
        }
        return 0;
      }
      Word w = sk_cmd->parsed() ? lab::shortcut_sk(word_k) : lab::shortcut_g1inv_g2(word_k);
      std::cout << format_word(w, h_alphabet) << "\nlength " << word_length(w) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

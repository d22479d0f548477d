#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "tistar/characterize.hpp"
#include "tistar/polycert.hpp"
#include "tistar/serialize.hpp"
#include "tistar/transmission.hpp"

namespace tistar::cli {

namespace {

std::optional<std::int64_t> env_int(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  std::size_t used = 0;
  const std::string text(raw);
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw std::invalid_argument(std::string(name) + " is not an integer");
  return v;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct Tree {
  ParsedSpec parsed;
  std::string text;
  std::int64_t n = 0;

  TreeGraph graph() const {
    return parsed.kind == TreeKind::Starlike ? build_starlike(parsed.starlike)
                                             : build_double_starlike(parsed.double_starlike);
  }
  Verdict verdict() const {
    return parsed.kind == TreeKind::Starlike ? check_starlike(parsed.starlike)
                                             : check_double_starlike(parsed.double_starlike);
  }
  Explanation explanation() const {
    return parsed.kind == TreeKind::Starlike ? explain_starlike(parsed.starlike)
                                             : explain_double_starlike(parsed.double_starlike);
  }
};

Tree load_tree(const std::string& text) {
  Tree t;
  t.parsed = parse_spec(text);
  if (t.parsed.kind == TreeKind::Starlike) {
    t.parsed.starlike.validate();
    t.text = format_spec(t.parsed.starlike);
    t.n = order(t.parsed.starlike);
  } else {
    t.parsed.double_starlike.validate();
    t.text = format_spec(t.parsed.double_starlike);
    t.n = order(t.parsed.double_starlike);
  }
  return t;
}

void require_oracle_cap(std::int64_t n, const RunConfig& cfg) {
  if (n > cfg.max_oracle_n)
    throw CapExceeded("tree order " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(cfg.max_oracle_n));
}

// The oracle agrees when it reaches the same yes/no answer and, for a
// negative verdict, the reported witness really has equal transmissions.
bool oracle_agrees(const Verdict& verdict, const TransmissionTable& table) {
  const Verdict brute = is_ti_bruteforce(table);
  if (brute.is_ti != verdict.is_ti) return false;
  if (verdict.is_ti) return true;
  const auto& w = *verdict.witness;
  const auto& g = table.graph();
  if (g.index_of(w.first) == g.index_of(w.second)) return false;
  if (table.at(w.first) != table.at(w.second)) return false;
  return !w.transmission || *w.transmission == table.at(w.first);
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kError;
  }
}

void nondecreasing_tuples(std::int64_t parts, std::int64_t total, std::int64_t min_part,
                          std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t v = min_part; v * parts <= total; ++v) {
    cur.push_back(v);
    nondecreasing_tuples(parts - 1, total - v, v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> tuples(std::int64_t parts, std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  nondecreasing_tuples(parts, total, 1, cur, out);
  return out;
}

}  // namespace

RunConfig RunConfig::with_env() const {
  RunConfig cfg = *this;
  if (auto v = env_int("TISTAR_MAX_ORACLE_N")) cfg.max_oracle_n = *v;
  if (auto v = env_int("TISTAR_MAX_BOX")) cfg.max_box = *v;
  return cfg;
}

void RunConfig::validate() const {
  if (threads < 1) throw std::invalid_argument("threads must be positive");
  if (max_oracle_n < 1) throw std::invalid_argument("oracle cap must be positive");
  if (max_box < 1) throw std::invalid_argument("box cap must be positive");
}

int cmd_check(const std::string& spec, bool oracle, bool explain, const RunConfig& cfg,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Tree tree = load_tree(spec);
    const Verdict verdict = tree.verdict();
    std::optional<bool> agrees;
    std::optional<bool> oracle_ti;
    if (oracle) {
      require_oracle_cap(tree.n, cfg);
      const auto table = bfs_transmissions(tree.graph());
      oracle_ti = is_ti_bruteforce(table).is_ti;
      agrees = oracle_agrees(verdict, table);
    }
    std::optional<Explanation> ex;
    if (explain) ex = tree.explanation();

    if (cfg.format == Format::Json) {
      json doc = VerdictRecord{tree.text, tree.n, verdict};
      if (agrees) doc["oracle"] = {{"is_ti", *oracle_ti}, {"agrees", *agrees}};
      if (ex) doc["explanation"] = explanation_to_json(*ex);
      out << doc.dump() << "\n";
    } else {
      out << tree.text << " (n = " << tree.n << "): " << verdict.describe() << "\n";
      if (agrees)
        out << "oracle: " << (*oracle_ti ? "TI" : "not TI") << ", "
            << (*agrees ? "agrees" : "DISAGREES") << "\n";
      if (ex) {
        for (const auto& f : ex->elementary_failures) out << "  elementary: " << f.describe() << "\n";
        for (const auto& c : ex->cases) {
          out << "  " << c.target.id() << " = " << c.target.value << ": "
              << c.candidates.size() << " candidate(s)";
          if (c.witness)
            out << ", witness p = " << c.witness->p << " (x, y) = (" << c.witness->x << ", "
                << c.witness->y << ")";
          if (!c.g_form_agrees) out << ", g-form MISMATCH";
          out << "\n";
        }
      }
    }
    if (agrees && !*agrees) return exit_code::kDisagreement;
    return verdict.is_ti ? exit_code::kOk : exit_code::kNegative;
  });
}

std::vector<StarlikeSpec> enumerate_starlike(std::int64_t k, std::int64_t max_order) {
  if (k < 3) throw InvalidSpec("starlike trees need k >= 3");
  std::vector<StarlikeSpec> out;
  for (std::int64_t n = k + 1; n <= max_order; ++n)
    for (auto& t : tuples(k, n - 1)) out.push_back({std::move(t)});
  return out;
}

std::vector<DoubleStarlikeSpec> enumerate_double(std::int64_t k, std::int64_t m,
                                                 std::int64_t max_order) {
  if (k < 2 || m < 2) throw InvalidSpec("double starlike trees need k, m >= 2");
  std::vector<DoubleStarlikeSpec> out;
  for (std::int64_t n = k + m + 2; n <= max_order; ++n) {
    std::vector<DoubleStarlikeSpec> level;
    for (std::int64_t c = 1; c + 1 + k + m <= n; ++c)
      for (std::int64_t sa = k; c + 1 + sa + m <= n; ++sa) {
        const std::int64_t sb = n - 1 - c - sa;
        for (const auto& a : tuples(k, sa))
          for (const auto& b : tuples(m, sb)) {
            if (k == m && (sa < sb || (sa == sb && a < b))) continue;
            level.push_back({c, a, b});
          }
      }
    std::sort(level.begin(), level.end(), [](const auto& x, const auto& y) {
      if (x.c != y.c) return x.c < y.c;
      if (x.a_branches != y.a_branches) return x.a_branches < y.a_branches;
      return x.b_branches < y.b_branches;
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int cmd_enumerate(const EnumerateOptions& opts, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    if (opts.verify) require_oracle_cap(opts.max_order, cfg);
    std::vector<std::string> specs;
    if (opts.kind == TreeKind::Starlike) {
      if (opts.branches.size() != 1) throw std::invalid_argument("--branches takes k for starlike");
      for (const auto& s : enumerate_starlike(opts.branches[0], opts.max_order))
        specs.push_back(format_spec(s));
    } else {
      if (opts.branches.empty() || opts.branches.size() > 2)
        throw std::invalid_argument("--branches takes k or k,m for double starlike");
      const auto k = opts.branches[0];
      const auto m = opts.branches.size() == 2 ? opts.branches[1] : k;
      for (const auto& s : enumerate_double(k, m, opts.max_order)) specs.push_back(format_spec(s));
    }

    struct Row {
      VerdictRecord record;
      bool agrees = true;
    };
    std::vector<Row> rows(specs.size());
    parallel_for(specs.size(), cfg.threads, [&](std::size_t i) {
      const Tree tree = load_tree(specs[i]);
      rows[i].record = {tree.text, tree.n, tree.verdict()};
      if (opts.verify)
        rows[i].agrees = oracle_agrees(rows[i].record.verdict, bfs_transmissions(tree.graph()));
    });

    std::ofstream file;
    if (!opts.out_path.empty()) {
      file.open(opts.out_path);
      if (!file) throw std::runtime_error("cannot open " + opts.out_path);
    }
    std::ostream& sink = opts.out_path.empty() ? out : file;
    std::size_t mismatches = 0;
    for (const auto& row : rows) {
      if (!row.agrees) ++mismatches;
      if (cfg.format == Format::Json) {
        json line = row.record;
        if (opts.verify) line["oracle_agrees"] = row.agrees;
        sink << line.dump() << "\n";
      } else {
        sink << row.record.spec << "\tn=" << row.record.n << "\t"
             << (row.record.verdict.is_ti ? "TI" : "not TI");
        if (opts.verify && !row.agrees) sink << "\tORACLE MISMATCH";
        sink << "\n";
      }
    }
    if (mismatches) {
      err << mismatches << " oracle mismatch(es)\n";
      return exit_code::kDisagreement;
    }
    return exit_code::kOk;
  });
}

namespace {

struct SpotCheck {
  std::int64_t t = 0;
  std::string spec;
  bool is_ti = false;
  std::optional<bool> oracle_ti;

  bool ok() const { return is_ti && oracle_ti.value_or(true); }
};

template <class Fam>
std::vector<SpotCheck> spot_checks(const Fam& fam, std::int64_t upto, const RunConfig& cfg) {
  std::vector<SpotCheck> out;
  for (std::int64_t t = 0; t <= upto; ++t) {
    const auto spec = instantiate(fam, t);
    SpotCheck sc;
    sc.t = t;
    sc.spec = format_spec(spec);
    const Tree tree = load_tree(sc.spec);
    sc.is_ti = tree.verdict().is_ti;
    if (tree.n <= cfg.max_oracle_n) sc.oracle_ti = is_ti_bruteforce(tree.graph()).is_ti;
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace

int cmd_certify(const std::string& path, std::optional<std::int64_t> spot_check,
                const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const auto families = parse_family_file(in);
    if (spot_check && *spot_check < 0) throw std::invalid_argument("--spot-check must be >= 0");

    struct Result {
      CertifyOutcome outcome;
      std::vector<SpotCheck> checks;
    };
    std::vector<Result> results(families.size());
    parallel_for(families.size(), cfg.threads, [&](std::size_t i) {
      results[i].outcome = certify_family(families[i]);
      if (const auto* c = std::get_if<FamilyCertificate>(&results[i].outcome)) verify_certificate(*c);
      if (spot_check)
        results[i].checks =
            std::visit([&](const auto& f) { return spot_checks(f, *spot_check, cfg); }, families[i]);
    });

    bool all_certified = true;
    bool spots_ok = true;
    for (std::size_t i = 0; i < families.size(); ++i) {
      const auto& r = results[i];
      const bool certified = std::holds_alternative<FamilyCertificate>(r.outcome);
      all_certified = all_certified && certified;
      const bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.ok(); });
      spots_ok = spots_ok && ok;
      if (cfg.format == Format::Json) {
        json doc = r.outcome;
        doc["family"] = families[i];
        if (spot_check) {
          json checks = json::array();
          for (const auto& c : r.checks) {
            json e{{"t", c.t}, {"spec", c.spec}, {"is_ti", c.is_ti}};
            if (c.oracle_ti) e["oracle_is_ti"] = *c.oracle_ti;
            checks.push_back(std::move(e));
          }
          doc["spot_check"] = {{"upto", *spot_check}, {"passed", ok}, {"instances", checks}};
        }
        out << doc.dump() << "\n";
      } else {
        out << describe_family(families[i]) << ": ";
        if (certified) {
          out << "certified (" << std::get<FamilyCertificate>(r.outcome).cases.size() << " cases)";
        } else {
          const auto& ia = std::get<Inapplicable>(r.outcome);
          out << "inapplicable at " << ia.case_id << " [" << ia.step << "] " << ia.detail;
        }
        if (spot_check)
          out << "; spot check t = 0.." << *spot_check << (ok ? " all TI" : " FAILED");
        out << "\n";
      }
    }
    if (!spots_ok) return exit_code::kDisagreement;
    return all_certified ? exit_code::kOk : exit_code::kNegative;
  });
}

int cmd_solve_dio(const BoxDioProblem& problem, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    problem.validate();
    const auto divisor = solve_by_divisors(problem);
    const auto brute = solve_bruteforce(problem, cfg.max_box);
    const bool agree = divisor.has_value() == brute.has_value() &&
                       (!divisor || problem.satisfied_by(divisor->x, divisor->y));
    if (cfg.format == Format::Json) {
      json doc{{"problem", problem}, {"c_star", c_star(problem)}, {"agree", agree}};
      doc["divisor"] = divisor ? json(*divisor) : json(nullptr);
      doc["bruteforce"] = brute ? json{{"x", brute->first}, {"y", brute->second}} : json(nullptr);
      out << doc.dump() << "\n";
    } else {
      out << "C* = " << c_star(problem) << "\n";
      if (divisor)
        out << "divisor: p = " << divisor->p << ", q = " << divisor->q << ", (x, y) = ("
            << divisor->x << ", " << divisor->y << ")\n";
      else
        out << "divisor: no solution\n";
      if (brute)
        out << "bruteforce: (x, y) = (" << brute->first << ", " << brute->second << ")\n";
      else
        out << "bruteforce: no solution\n";
      if (!agree) out << "DISAGREEMENT\n";
    }
    if (!agree) {
      err << "internal error: divisor method and brute force disagree\n";
      return exit_code::kDisagreement;
    }
    return divisor ? exit_code::kOk : exit_code::kNegative;
  });
}

int cmd_transmissions(const std::string& spec, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const Tree tree = load_tree(spec);
    require_oracle_cap(tree.n, cfg);
    const auto table = bfs_transmissions(tree.graph());
    if (cfg.format == Format::Json) {
      out << transmissions_to_json(table).dump() << "\n";
    } else {
      for (std::size_t v = 0; v < table.size(); ++v)
        out << to_string(table.graph().label(v)) << "\t" << table[v] << "\n";
    }
    return exit_code::kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = RunConfig{}.with_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kError;
  }

  CLI::App app{"Transmission irregularity of starlike and double starlike trees", "tistar"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned threads = cfg.threads;
  std::int64_t max_n = cfg.max_oracle_n;
  std::int64_t max_box = cfg.max_box;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* max_n_opt = app.add_option("--max-oracle-n", max_n, "Largest tree order for the BFS oracle");
  auto* max_box_opt = app.add_option("--max-box", max_box, "Largest box size for brute-force solving");

  std::string spec;
  bool oracle = false, explain = false;
  auto* check = app.add_subcommand("check", "Decide TI for one tree");
  check->add_option("spec", spec, "S:A1,...,Ak or DS:C;A1,...;B1,...")->required();
  check->add_flag("--oracle", oracle, "Cross-check against the BFS oracle");
  check->add_flag("--explain", explain, "List every case and its divisor scan");

  EnumerateOptions eopts;
  std::string type = "starlike";
  std::string branches;
  auto* enumerate = app.add_subcommand("enumerate", "Stream verdicts for every tree up to an order");
  enumerate->add_option("--type", type)->check(CLI::IsMember({"starlike", "double"}));
  enumerate->add_option("--max-order", eopts.max_order)->required();
  enumerate->add_option("--branches", branches, "k, or k,m for double starlike")->required();
  enumerate->add_option("--out", eopts.out_path, "Write NDJSON here instead of stdout");
  enumerate->add_flag("--verify", eopts.verify, "Cross-check every verdict against the oracle");

  std::string family_file;
  std::optional<std::int64_t> spot;
  auto* certify = app.add_subcommand("certify", "Certify families listed in a file");
  certify->add_option("file", family_file)->required();
  certify->add_option("--spot-check", spot, "Also check members t = 0..T");

  BoxDioProblem problem;
  auto* solve = app.add_subcommand("solve-dio", "Solve (x^2 + c1 x) - (y^2 + c2 y) = c3 on [c4] x [c5]");
  solve->add_option("c1", problem.c1)->required();
  solve->add_option("c2", problem.c2)->required();
  solve->add_option("c3", problem.c3)->required();
  solve->add_option("c4", problem.c4)->required();
  solve->add_option("c5", problem.c5)->required();

  auto* trans = app.add_subcommand("transmissions", "Dump BFS transmissions of one tree");
  trans->add_option("spec", spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kError;
  }

  cfg.format = format == "text" ? Format::Text : Format::Json;
  cfg.threads = threads;
  if (max_n_opt->count()) cfg.max_oracle_n = max_n;
  if (max_box_opt->count()) cfg.max_box = max_box;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kError;
  }

  if (check->parsed()) return cmd_check(spec, oracle, explain, cfg, out, err);
  if (enumerate->parsed()) {
    eopts.kind = type == "double" ? TreeKind::DoubleStarlike : TreeKind::Starlike;
    return guarded(err, [&] {
      eopts.branches.clear();
      std::size_t start = 0;
      while (start <= branches.size()) {
        auto pos = branches.find(',', start);
        eopts.branches.push_back(std::stoll(branches.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      return cmd_enumerate(eopts, cfg, out, err);
    });
  }
  if (certify->parsed()) return cmd_certify(family_file, spot, cfg, out, err);
  if (solve->parsed()) return cmd_solve_dio(problem, cfg, out, err);
  return cmd_transmissions(spec, cfg, out, err);
}

}  // namespace tistar::cli

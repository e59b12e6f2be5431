#include "cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "count_cache.hpp"
#include "twoassoc/associahedron.hpp"
#include "twoassoc/audit.hpp"
#include "twoassoc/cd_index.hpp"
#include "twoassoc/count_w.hpp"
#include "twoassoc/enumerate_wn.hpp"
#include "twoassoc/poset_io.hpp"
#include "twoassoc/series.hpp"

namespace twoassoc::cli {

namespace {

struct Config {
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_elements = EnumerationLimits{}.max_elements;
  int r = 0;
  std::string n_text;
  int max_degree = -1;
  std::string tree = ".";
  std::string profile = "desk";
};

// Invalid input discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("--format " + c.format + " is not available for this command");
}

std::vector<int> rank_counts(const RankedPoset& p) {
  std::vector<int> counts;
  for (int x = 0; x < p.size(); ++x) {
    const int r = p.rank(x);
    if (r >= static_cast<int>(counts.size())) counts.resize(r + 1, 0);
    ++counts[r];
  }
  return counts;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

int cmd_assoc_enumerate(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json", "dot"});
  if (c.r < 1) throw UsageError("--r must be at least 1");
  const auto k = enumerate_Kr(c.r);
  const auto counts = rank_counts(k);
  const auto f = solve_f(std::max(1, c.r));
  bool agree = true;
  std::vector<std::vector<std::string>> rows;
  for (int m = 0; m < static_cast<int>(counts.size()); ++m) {
    const BigInt rec = count_K(m, c.r);
    const BigInt ser = coefficient(f, m, {c.r});
    const bool ok = rec == counts[m] && ser == counts[m];
    agree = agree && ok;
    rows.push_back({std::to_string(m), std::to_string(counts[m]), rec.str(), ser.str(), ok ? "AGREE" : "DISAGREE"});
  }
  if (c.format == "dot") {
    out << poset_to_dot(k, "K_" + std::to_string(c.r));
  } else if (c.format == "json") {
    nlohmann::ordered_json doc;
    doc["r"] = c.r;
    doc["rank_counts"] = counts;
    doc["oracles_agree"] = agree;
    const auto body = poset_to_json(k);
    doc["elements"] = body["elements"];
    doc["covers"] = body["covers"];
    out << doc.dump(2) << "\n";
  } else {
    out << "K_" << c.r << ": " << k.size() << " elements\n";
    out << "rank  enumerated  count_K  solve_f  status\n";
    for (const auto& row : rows)
      out << pad(row[0], 6) << pad(row[1], 12) << pad(row[2], 9) << pad(row[3], 9) << row[4] << "\n";
    out << "rank counts: " << join(counts) << "\n";
    out << "\nid  rank  tree\n";
    for (int x = 0; x < k.size(); ++x)
      out << pad(std::to_string(x), 4) << pad(std::to_string(k.rank(x)), 6) << k.label(x) << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_wn_enumerate(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json", "dot"});
  const NVector n = parse_n(c.n_text);
  const auto w = enumerate_Wn(n, EnumerationLimits{c.max_elements});
  const auto counts = rank_counts(w.poset);
  if (c.format == "dot") {
    out << poset_to_dot(w.poset, "W");
  } else if (c.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["rank_counts"] = counts;
    const auto body = poset_to_json(w.poset);
    auto elements = body["elements"];
    for (auto& e : elements) e["pi"] = w.pi_labels[e["id"].get<int>()];
    doc["elements"] = std::move(elements);
    doc["covers"] = body["covers"];
    out << doc.dump(2) << "\n";
  } else {
    out << "W_" << n_to_text(n) << ": " << w.poset.size() << " elements, top rank " << top_rank(n) << "\n";
    out << "rank counts: " << join(counts) << "\n";
    out << "\nid    rank  pi        2-bracketing\n";
    for (int x = 0; x < w.poset.size(); ++x)
      out << pad(std::to_string(x), 6) << pad(std::to_string(w.poset.rank(x)), 6) << pad(w.pi_labels[x], 10)
          << w.poset.label(x) << "\n";
  }
  return 0;
}

int cmd_counts(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const NVector n = parse_n(c.n_text);
  const int D = c.max_degree < 0 ? total_points(n) : c.max_degree;
  if (D < total_points(n)) throw UsageError("--max-degree must be at least |n| = " + std::to_string(total_points(n)));
  const auto w = enumerate_Wn(n, EnumerationLimits{c.max_elements});
  std::map<std::pair<std::string, int>, long long> enumerated;
  for (int x = 0; x < w.poset.size(); ++x) ++enumerated[{w.pi_labels[x], w.poset.rank(x)}];

  bool agree = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream table;
  table << "tree          m   series  recurrence  enumeration  status\n";
  for (const auto& t : all_trees(static_cast<int>(n.size()))) {
    const auto F = solve_F(t, D);
    for (int m = 0; m <= top_rank(n); ++m) {
      const BigInt s = coefficient(F, m, n);
      const BigInt rec = count_W(t, m, n);
      auto it = enumerated.find({t.to_text(), m});
      const BigInt e = it == enumerated.end() ? 0 : it->second;
      const bool ok = s == rec && s == e;
      agree = agree && ok;
      rows.push_back({{"tree", t.to_text()}, {"m", m}, {"series", s.str()}, {"recurrence", rec.str()},
                      {"enumeration", e.str()}, {"agree", ok}});
      table << pad(t.to_text(), 14) << pad(std::to_string(m), 4) << pad(s.str(), 8) << pad(rec.str(), 12)
            << pad(e.str(), 13) << (ok ? "AGREE" : "DISAGREE") << "\n";
    }
  }
  if (c.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["max_degree"] = D;
    doc["rows"] = std::move(rows);
    doc["all_agree"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    out << "W_" << n_to_text(n) << " face counts by tree and dimension (D = " << D << ")\n" << table.str();
    out << (agree ? "all rows AGREE" : "some rows DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_gf_solve(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  if (c.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  const Tree t = Tree::parse(c.tree);
  const auto F = solve_F(t, c.max_degree);
  if (c.format == "json") {
    out << series_to_json(F).dump(2) << "\n";
  } else {
    out << "F_" << t.to_text() << " in " << F.vars() << " variable(s), truncated above degree " << c.max_degree
        << "\n";
    for (const auto& [n, poly] : F.terms()) out << pad(n_to_text(n), 16) << poly.to_string() << "\n";
  }
  return 0;
}

int print_report(const Config& c, const AuditReport& report, std::ostream& out) {
  require_format(c, {"table", "json"});
  if (c.format == "json") out << report.to_json().dump(2) << "\n";
  else out << report.to_table();
  return report.all_pass() ? 0 : 1;
}

int cmd_verify_eulerian(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const NVector n = parse_n(c.n_text);
  const auto w = enumerate_Wn(n, EnumerationLimits{c.max_elements});
  return print_report(c, audit_eulerian(n, &w), out);
}

int cmd_cd_index(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"table", "json"});
  const bool by_n = !c.n_text.empty();
  if (by_n == (c.r > 0)) throw UsageError("give exactly one of --n and --r");
  RankedPoset hat;
  std::string name;
  if (by_n) {
    const NVector n = parse_n(c.n_text);
    hat = completed(enumerate_Wn(n, EnumerationLimits{c.max_elements}));
    name = "W_" + n_to_text(n);
  } else {
    hat = complete_with_min(enumerate_Kr(c.r), -1);
    name = "K_" + std::to_string(c.r);
  }
  const auto report = verify_eulerian(hat);
  if (!report.eulerian()) {
    err << "refusing to compute the cd-index: completed " << name << " is not Eulerian ("
        << report.unbalanced.size() << " unbalanced intervals" << (report.graded ? "" : ", not graded") << ")\n";
    return 1;
  }
  const auto cd = cd_index(hat);
  if (c.format == "json") {
    nlohmann::ordered_json doc;
    doc["poset"] = name;
    doc["completed"] = true;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [word, coeff] : cd.terms()) terms.push_back({word, coeff.str()});
    doc["terms"] = std::move(terms);
    doc["text"] = cd.to_string();
    out << doc.dump(2) << "\n";
  } else {
    out << "cd-index of completed " << name << ": " << cd.to_string() << "\n";
  }
  return 0;
}

AuditReport quick_audit() {
  AuditReport report;
  std::vector<NVector> ns{{1}, {2}, {3}, {4}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {1, 2}, {1, 1, 1}};
  for (const auto& n : ns) {
    const auto w = enumerate_Wn(n);
    report.merge(audit_counts(n, total_points(n), &w));
    report.merge(audit_eulerian(n, &w));
  }
  report.merge(audit_identities(ns, {1, 2}, 4));
  return report;
}

int cmd_audit(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  if (c.profile == "desk") return print_report(c, audit_desk(), out);
  if (c.profile == "quick") return print_report(c, quick_audit(), out);
  throw UsageError("unknown audit profile '" + c.profile + "' (expected desk or quick)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Face posets of associahedra and 2-associahedra", "twoassoc"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
  app.add_option("--cache-dir", c.cache_dir, "directory for the count cache");
  app.add_flag("--no-cache", c.no_cache, "do not read or write the count cache");
  app.add_option("--max-elements", c.max_elements, "abort enumerations larger than this");

  auto* assoc = app.add_subcommand("assoc", "associahedra K_r")->require_subcommand(1)->fallthrough();
  auto* assoc_enum = assoc->add_subcommand("enumerate", "face poset of K_r")->fallthrough();
  assoc_enum->add_option("--r", c.r, "number of leaves")->required();

  auto* wn = app.add_subcommand("wn", "2-associahedra W_n")->require_subcommand(1)->fallthrough();
  auto* wn_enum = wn->add_subcommand("enumerate", "face poset of W_n")->fallthrough();
  wn_enum->add_option("--n", c.n_text, "marked points per line, e.g. 2,1")->required();

  auto* counts = app.add_subcommand("counts", "series, recurrence and enumeration counts side by side")->fallthrough();
  counts->add_option("--n", c.n_text, "marked points per line")->required();
  counts->add_option("--max-degree", c.max_degree, "series truncation degree (default |n|)");

  auto* gf = app.add_subcommand("gf", "generating functions")->require_subcommand(1)->fallthrough();
  auto* gf_solve = gf->add_subcommand("solve", "solve for f or F_T")->fallthrough();
  gf_solve->add_option("--tree", c.tree, "tree text, e.g. (..)");
  gf_solve->add_option("--max-degree", c.max_degree, "truncation degree")->required();

  auto* verify = app.add_subcommand("verify", "verification")->require_subcommand(1)->fallthrough();
  auto* verify_eul = verify->add_subcommand("eulerian", "check that the completed W_n is Eulerian")->fallthrough();
  verify_eul->add_option("--n", c.n_text, "marked points per line")->required();

  auto* cd = app.add_subcommand("cd-index", "cd-index of a completed face poset")->fallthrough();
  cd->add_option("--n", c.n_text, "marked points per line");
  cd->add_option("--r", c.r, "number of leaves");

  auto* audit = app.add_subcommand("audit", "run the audit suite")->fallthrough();
  audit->add_option("--profile", c.profile, "desk or quick");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::optional<CountCache> cache;
  if (!c.no_cache) {
    cache.emplace(c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir));
    cache->load(err);
  }

  int status = 2;
  try {
    if (assoc_enum->parsed()) status = cmd_assoc_enumerate(c, out);
    else if (wn_enum->parsed()) status = cmd_wn_enumerate(c, out);
    else if (counts->parsed()) status = cmd_counts(c, out);
    else if (gf_solve->parsed()) status = cmd_gf_solve(c, out);
    else if (verify_eul->parsed()) status = cmd_verify_eulerian(c, out);
    else if (cd->parsed()) status = cmd_cd_index(c, out, err);
    else if (audit->parsed()) status = cmd_audit(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << " (raise --max-elements)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << "\n";
    status = 1;
  }
  if (cache) cache->flush(err);
  return status;
}

}  // namespace twoassoc::cli

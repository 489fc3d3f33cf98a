// Command line front end: chains, boards, move vectors, t values, inverse
// analysis, and the unique-root scan. Results go to stdout (or --out FILE),
// diagnostics and scan checkpoints to stderr. Exit codes: 0 ok, 1 for a
// verification failure or overflow, 2 for argument errors.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strangeroots/alist.hpp"
#include "strangeroots/correspondence.hpp"
#include "strangeroots/fagan.hpp"
#include "strangeroots/root_search.hpp"
#include "strangeroots/tchoukaillon.hpp"
#include "strangeroots/verify.hpp"

using json = nlohmann::ordered_json;
using namespace strangeroots;

namespace {

enum class Format { table, jsonl, bfile };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "jsonl") return Format::jsonl;
  return Format::bfile;
}

std::string tuple_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string set_str(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

int digits(Int v) { return static_cast<int>(std::to_string(v).size()); }

void pad_to(std::ostream& os, const std::string& s, int width) {
  os << s;
  for (int i = static_cast<int>(s.size()); i < width; ++i) os << ' ';
}

// the Figure-style two-row layout: labels on the left, one column per entry
void two_row_table(std::ostream& os, const std::string& top_label, const std::string& bottom_label,
                   const std::vector<std::pair<Int, Int>>& columns) {
  const int labw = static_cast<int>(std::max(top_label.size(), bottom_label.size()));
  std::vector<int> widths;
  widths.reserve(columns.size());
  for (const auto& [a, b] : columns) widths.push_back(std::max(digits(a), digits(b)));
  pad_to(os, top_label, labw);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::string s = std::to_string(columns[i].first);
    os << "  ";
    for (int k = static_cast<int>(s.size()); k < widths[i]; ++k) os << ' ';
    os << s;
  }
  os << "\n";
  pad_to(os, bottom_label, labw);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::string s = std::to_string(columns[i].second);
    os << "  ";
    for (int k = static_cast<int>(s.size()); k < widths[i]; ++k) os << ' ';
    os << s;
  }
  os << "\n";
}

Board parse_board(std::string text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '\t') cleaned += c;
  std::vector<Int> counts;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    const std::size_t comma = cleaned.find(',', pos);
    const std::string tok = cleaned.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("board: empty entry in '" + text + "'");
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("board: '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw std::invalid_argument("board: '" + tok + "' is not an integer");
    counts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Board(std::move(counts));
}

std::string alist_str(const AlistSequence& a) {
  std::string s;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (i) s += " -> ";
    s += "<" + std::to_string(a.pairs[i].index) + "," + std::to_string(a.pairs[i].value) + ">";
  }
  return s;
}

std::string fagan_str(const FaganSequence& f) {
  std::string s;
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    if (i) s += " -> ";
    s += "(" + std::to_string(f.pairs[i].index) + "," + std::to_string(f.pairs[i].value) + ")";
  }
  return s;
}

json pairs_json(const std::vector<AlistPair>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back({p.index, p.value});
  return arr;
}

json pairs_json(const std::vector<FaganPair>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back({p.index, p.value});
  return arr;
}

void bfile_lines(std::ostream& os, const std::vector<std::pair<Int, Int>>& rows) {
  for (const auto& [i, v] : rows) os << i << " " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strange roots, Fagan chains, and Tchoukaillon solitaire"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::string out_path;
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"table", "jsonl", "bfile"}));
  app.add_option("--out", out_path, "write results to FILE instead of stdout");

  std::ofstream out_file;
  auto out = [&]() -> std::ostream& {
    if (!out_path.empty() && !out_file.is_open()) {
      out_file.open(out_path);
      if (!out_file) throw std::invalid_argument("cannot open --out file '" + out_path + "'");
    }
    return out_path.empty() ? static_cast<std::ostream&>(std::cout) : out_file;
  };
  auto fmt = [&]() { return parse_format(format_name); };
  int exit_code = 0;

  // ---- sr ----
  auto* sr_cmd = app.add_subcommand("sr", "strange root of N, or of a whole range");
  Int sr_n = 0;
  std::vector<Int> sr_range;
  auto* sr_n_opt = sr_cmd->add_option("N", sr_n, "seed");
  sr_cmd->add_option("--range", sr_range, "first and last seed")->expected(2)->excludes(sr_n_opt);
  sr_cmd->callback([&] {
    std::ostream& os = out();
    if (!sr_range.empty()) {
      const Int a = sr_range[0], b = sr_range[1];
      if (a < 1 || b < a) throw std::invalid_argument("sr --range: need 1 <= A <= B");
      std::vector<std::pair<Int, Int>> rows;
      for (Int n = a; n <= b; ++n) rows.push_back({n, strange_root(n)});
      switch (fmt()) {
        case Format::table: two_row_table(os, "n", "sr(n)", rows); break;
        case Format::jsonl:
          for (const auto& [n, r] : rows) os << json{{"n", n}, {"sr", r}}.dump() << "\n";
          break;
        case Format::bfile: bfile_lines(os, rows); break;
      }
    } else if (sr_n_opt->count() > 0) {
      const Int r = strange_root(sr_n);
      switch (fmt()) {
        case Format::table: os << "sr(" << sr_n << ") = " << r << "\n"; break;
        case Format::jsonl: os << json{{"n", sr_n}, {"sr", r}}.dump() << "\n"; break;
        case Format::bfile: os << sr_n << " " << r << "\n"; break;
      }
    } else {
      throw std::invalid_argument("sr: give a seed N or --range A B");
    }
  });

  // ---- alist ----
  auto* alist_cmd = app.add_subcommand("alist", "the full chain for seed N");
  Int alist_n = 0;
  alist_cmd->add_option("N", alist_n, "seed")->required();
  alist_cmd->callback([&] {
    std::ostream& os = out();
    const AlistSequence seq = alist(alist_n);
    switch (fmt()) {
      case Format::table: os << alist_str(seq) << "\n"; break;
      case Format::jsonl:
        os << json{{"n", seq.seed}, {"root", seq.root()}, {"pairs", pairs_json(seq.pairs)}}.dump() << "\n";
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (const auto& p : seq.pairs) rows.push_back({p.index, p.value});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- cf ----
  auto* cf_cmd = app.add_subcommand("cf", "Fagan value of seed M");
  Int cf_m = 0;
  cf_cmd->add_option("M", cf_m, "seed")->required();
  cf_cmd->callback([&] {
    std::ostream& os = out();
    const Int v = cf(cf_m);
    switch (fmt()) {
      case Format::table: os << "cf(" << cf_m << ") = " << v << "\n"; break;
      case Format::jsonl: os << json{{"m", cf_m}, {"cf", v}}.dump() << "\n"; break;
      case Format::bfile: os << cf_m << " " << v << "\n"; break;
    }
  });

  // ---- fagan-seq ----
  auto* fs_cmd = app.add_subcommand("fagan-seq", "Fagan's chain for seed M");
  Int fs_m = 0;
  fs_cmd->add_option("M", fs_m, "seed")->required();
  fs_cmd->callback([&] {
    std::ostream& os = out();
    const FaganSequence fs = fagan_sequence(fs_m);
    switch (fmt()) {
      case Format::table: os << fagan_str(fs) << "\n"; break;
      case Format::jsonl:
        os << json{{"m", fs.seed}, {"cf", fs.cf()}, {"pairs", pairs_json(fs.pairs)}}.dump() << "\n";
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (const auto& p : fs.pairs) rows.push_back({p.index, p.value});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- tchouk ----
  auto* tch_cmd = app.add_subcommand("tchouk", "winning configuration of N stones");
  Int tch_n = 0;
  std::string tch_method = "explicit";
  tch_cmd->add_option("N", tch_n, "stone count")->required();
  tch_cmd->add_option("--method", tch_method, "construction")->check(CLI::IsMember({"explicit", "recursive"}));
  tch_cmd->callback([&] {
    std::ostream& os = out();
    const Board b = tch_method == "explicit" ? tchouk(tch_n) : tchouk_recursive(tch_n);
    switch (fmt()) {
      case Format::table: os << tuple_str(b.counts()) << "\n"; break;
      case Format::jsonl: os << json{{"n", tch_n}, {"board", b.counts()}}.dump() << "\n"; break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (Int i = 1; i <= b.length(); ++i) rows.push_back({i, b.stones(i)});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- movevec ----
  auto* mv_cmd = app.add_subcommand("movevec", "per-hole play counts for N stones");
  Int mv_n = 0;
  std::string mv_method = "formula";
  mv_cmd->add_option("N", mv_n, "stone count")->required();
  mv_cmd->add_option("--method", mv_method, "how to compute it")
      ->check(CLI::IsMember({"formula", "board", "play"}));
  mv_cmd->callback([&] {
    std::ostream& os = out();
    std::vector<Int> mv;
    if (mv_method == "formula") {
      mv = move_vector(mv_n);
    } else if (mv_method == "board") {
      mv = move_vector_from_board(tchouk(mv_n));
    } else {
      if (mv_n < 1) throw std::invalid_argument("movevec: stone count must be >= 1");
      const auto trace = solve(tchouk(mv_n), false);
      if (!trace) throw std::logic_error("movevec: winning configuration did not solve");
      mv.assign(static_cast<std::size_t>(tchouk(mv_n).length()), 0);
      for (Int hole : trace->selections) ++mv[static_cast<std::size_t>(hole - 1)];
    }
    switch (fmt()) {
      case Format::table: os << tuple_str(mv) << "\n"; break;
      case Format::jsonl:
        os << json{{"n", mv_n}, {"method", mv_method}, {"moves", mv}}.dump() << "\n";
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (std::size_t k = 0; k < mv.size(); ++k) rows.push_back({static_cast<Int>(k + 1), mv[k]});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- t ----
  auto* t_cmd = app.add_subcommand("t", "least stone count reaching hole K");
  Int t_k = 0;
  std::vector<Int> t_range;
  std::string t_method = "brown";
  auto* t_k_opt = t_cmd->add_option("K", t_k, "hole");
  t_cmd->add_option("--range", t_range, "first and last hole")->expected(2)->excludes(t_k_opt);
  t_cmd->add_option("--method", t_method, "backward rounding or first-appearance scan")
      ->check(CLI::IsMember({"brown", "scan"}));
  t_cmd->callback([&] {
    std::ostream& os = out();
    auto compute = [&](Int k) { return t_method == "brown" ? t(k) : t_by_scan(k); };
    if (!t_range.empty()) {
      const Int a = t_range[0], b = t_range[1];
      if (a < 1 || b < a) throw std::invalid_argument("t --range: need 1 <= A <= B");
      std::vector<std::pair<Int, Int>> rows;
      for (Int k = a; k <= b; ++k) rows.push_back({k, compute(k)});
      switch (fmt()) {
        case Format::table: {
          int wk = static_cast<int>(std::string("k").size());
          int wt = static_cast<int>(std::string("t(k)").size());
          for (const auto& [k, v] : rows) {
            wk = std::max(wk, digits(k));
            wt = std::max(wt, digits(v));
          }
          os << std::string(static_cast<std::size_t>(wk - 1), ' ') << "k  "
             << std::string(static_cast<std::size_t>(wt - 4), ' ') << "t(k)\n";
          for (const auto& [k, v] : rows) {
            const std::string ks = std::to_string(k), vs = std::to_string(v);
            os << std::string(static_cast<std::size_t>(wk) - ks.size(), ' ') << ks << "  "
               << std::string(static_cast<std::size_t>(wt) - vs.size(), ' ') << vs << "\n";
          }
          break;
        }
        case Format::jsonl:
          for (const auto& [k, v] : rows) os << json{{"k", k}, {"t", v}}.dump() << "\n";
          break;
        case Format::bfile: bfile_lines(os, rows); break;
      }
    } else if (t_k_opt->count() > 0) {
      const Int v = compute(t_k);
      switch (fmt()) {
        case Format::table: os << "t(" << t_k << ") = " << v << "\n"; break;
        case Format::jsonl: os << json{{"k", t_k}, {"t", v}}.dump() << "\n"; break;
        case Format::bfile: os << t_k << " " << v << "\n"; break;
      }
    } else {
      throw std::invalid_argument("t: give a hole K or --range A B");
    }
  });

  // ---- solve ----
  auto* solve_cmd = app.add_subcommand("solve", "play a board by the index rule");
  std::string solve_board;
  solve_cmd->add_option("BOARD", solve_board, "counts for hole 1 upward, e.g. \"0,1,1,3,5\"")->required();
  solve_cmd->callback([&] {
    std::ostream& os = out();
    Board cur = parse_board(solve_board);
    const std::vector<Int> initial = cur.counts();
    std::vector<Int> selections;
    bool loss = false;
    std::vector<std::string> lines;
    lines.push_back(tuple_str(cur.counts()));
    while (!cur.empty()) {
      Int hole = 0;
      for (Int i = 1; i <= cur.length(); ++i)
        if (cur.stones(i) == i) {
          hole = i;
          break;
        }
      if (hole == 0) {
        loss = true;
        break;
      }
      cur = *play_move(cur, hole);
      selections.push_back(hole);
      lines.push_back("play " + std::to_string(hole) + " -> " + tuple_str(cur.counts()));
    }
    switch (fmt()) {
      case Format::table:
        for (const auto& line : lines) os << line << "\n";
        os << (loss ? "LOSS" : "WIN in " + std::to_string(selections.size()) + " moves") << "\n";
        break;
      case Format::jsonl:
        os << json{{"board", initial}, {"result", loss ? "loss" : "win"}, {"selections", selections}}.dump()
           << "\n";
        break;
      case Format::bfile: {
        if (loss) {
          std::cerr << "# loss: no trace\n";
        } else {
          std::vector<std::pair<Int, Int>> rows;
          for (std::size_t k = 0; k < selections.size(); ++k)
            rows.push_back({static_cast<Int>(k + 1), selections[k]});
          bfile_lines(os, rows);
        }
        break;
      }
    }
  });

  // ---- inverse ----
  auto* inv_cmd = app.add_subcommand("inverse", "chain predecessors of <I+1, V>");
  Int inv_i = 0, inv_v = 0;
  inv_cmd->add_option("I", inv_i, "index of the earlier pair")->required();
  inv_cmd->add_option("V", inv_v, "value of the later pair")->required();
  inv_cmd->callback([&] {
    std::ostream& os = out();
    const std::vector<Int> us = inverse_step(inv_i, inv_v);
    switch (fmt()) {
      case Format::table: os << set_str(us) << "\n"; break;
      case Format::jsonl:
        os << json{{"i", inv_i}, {"v", inv_v}, {"preimages", us}}.dump() << "\n";
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (std::size_t k = 0; k < us.size(); ++k) rows.push_back({static_cast<Int>(k + 1), us[k]});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- xseq ----
  auto* xs_cmd = app.add_subcommand("xseq", "backward chain from the terminal pair of R");
  Int xs_r = 0;
  xs_cmd->add_option("R", xs_r, "root")->required();
  xs_cmd->callback([&] {
    std::ostream& os = out();
    const XSequence xs = x_sequence(xs_r);
    switch (fmt()) {
      case Format::table: {
        // rows run i = r down to 1; a * marks i dividing x_{i+1}-1
        std::vector<bool> hit(static_cast<std::size_t>(xs.root + 1), false);
        for (Int i : xs.divisible_at) hit[static_cast<std::size_t>(i)] = true;
        const int wi = digits(xs.root);
        int wx = 3;
        for (Int v : xs.values) wx = std::max(wx, digits(v));
        os << std::string(static_cast<std::size_t>(wi - 1), ' ') << "i  "
           << std::string(static_cast<std::size_t>(wx - 3), ' ') << "x_i\n";
        for (std::size_t k = 0; k < xs.values.size(); ++k) {
          const Int i = xs.root - static_cast<Int>(k);
          const std::string is = std::to_string(i), vs = std::to_string(xs.values[k]);
          os << std::string(static_cast<std::size_t>(wi) - is.size(), ' ') << is << "  "
             << std::string(static_cast<std::size_t>(wx) - vs.size(), ' ') << vs;
          if (i <= xs.root && hit[static_cast<std::size_t>(i)]) os << "  *";
          os << "\n";
        }
        os << (xs.unique() ? "unique: at most two preimages" : "not unique: extra preimages exist") << "\n";
        break;
      }
      case Format::jsonl:
        os << json{{"r", xs.root},
                   {"x1", xs.x1()},
                   {"values", xs.values},
                   {"divisible_at", xs.divisible_at},
                   {"unique", xs.unique()}}
                  .dump()
           << "\n";
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (Int i = 1; i <= xs.root; ++i)
          rows.push_back({i, xs.values[static_cast<std::size_t>(xs.root - i)]});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- scan ----
  auto* scan_cmd = app.add_subcommand("scan", "all roots up to RMAX with at most two preimages");
  Int scan_rmax = 0;
  ScanOptions scan_opts;
  scan_cmd->add_option("RMAX", scan_rmax, "largest root to test")->required();
  scan_cmd->add_option("--jobs", scan_opts.jobs, "worker threads (default: $STRANGEROOTS_JOBS or hardware)");
  scan_cmd->add_option("--preimage-cap", scan_opts.preimage_cap,
                       "list preimages only when there are at most this many");
  scan_cmd->add_option("--checkpoint-every", scan_opts.checkpoint_every,
                       "stderr progress interval in roots (default 4096)");
  scan_cmd->callback([&] {
    std::ostream& os = out();
    scan_opts.progress = &std::cerr;
    const std::vector<RootRecord> recs = scan_unique_roots(scan_rmax, scan_opts);
    switch (fmt()) {
      case Format::table:
        for (const auto& rec : recs) {
          os << "r=" << rec.root << " preimages=";
          if (!rec.preimages.empty()) {
            for (std::size_t k = 0; k < rec.preimages.size(); ++k)
              os << (k ? "," : "") << rec.preimages[k];
          } else {
            os << "(" << rec.preimage_lo - 1 << "," << rec.preimage_hi << "] count=" << rec.count();
          }
          os << "\n";
        }
        break;
      case Format::jsonl:
        for (const auto& rec : recs) {
          json j{{"r", rec.root}, {"count", rec.count()}, {"lo", rec.preimage_lo}, {"hi", rec.preimage_hi}};
          if (!rec.preimages.empty()) j["preimages"] = rec.preimages;
          os << j.dump() << "\n";
        }
        break;
      case Format::bfile: {
        std::vector<std::pair<Int, Int>> rows;
        for (std::size_t k = 0; k < recs.size(); ++k) rows.push_back({static_cast<Int>(k + 1), recs[k].root});
        bfile_lines(os, rows);
        break;
      }
    }
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run every cross-check suite");
  std::string verify_level = "quick";
  verify_cmd->add_option("--level", verify_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->callback([&] {
    const VerifyLevel level = verify_level == "quick" ? VerifyLevel::quick : VerifyLevel::full;
    if (!run_verify(level, out())) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dismal/divisors.hpp"
#include "dismal/expression.hpp"
#include "dismal/genfunc.hpp"
#include "dismal/primes.hpp"
#include "dismal/sequences.hpp"
#include "dismal/squares.hpp"
#include "dismal/structures.hpp"
#include "dismal/tables.hpp"
#include "oeis_fetch.hpp"

namespace fs = std::filesystem;
using namespace dismal;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct Options {
  int base = 10;
  std::string format = "plain";
  bool online = false;
  bool slow = false;
  bool diff = false;
  std::string golden_dir = DISMAL_GOLDEN_DIR;
  std::string range;
  int max_k = 0;
  int max_n = 0;
  int l = 0;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, std::uint64_t lo, std::uint64_t hi) {
  if (text.empty()) return {lo, hi};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must look like START:END");
  try {
    const auto a = std::stoull(text.substr(0, colon));
    const auto b = std::stoull(text.substr(colon + 1));
    if (a > b) throw ParseError("range start exceeds end");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParseError("range must look like START:END");
  }
}

// Prints `text`, or compares it with the golden file when --diff is given.
int emit_or_diff(const Options& o, const std::string& golden_name, const std::string& text) {
  if (!o.diff) {
    std::cout << text;
    return kOk;
  }
  const fs::path path = fs::path(o.golden_dir) / golden_name;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "no golden file " << path << '\n';
    return kUsage;
  }
  std::stringstream golden;
  golden << in.rdbuf();
  if (golden.str() == text) {
    std::cout << "match " << path.filename().string() << '\n';
    return kOk;
  }
  std::istringstream want(golden.str()), got(text);
  std::string a, b;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(want, a));
    const bool hb = static_cast<bool>(std::getline(got, b));
    if (!ha && !hb) break;
    if (!ha || !hb || a != b) {
      std::cout << "mismatch " << path.filename().string() << " line " << line << "\n  golden:   " << (ha ? a : "<eof>")
                << "\n  computed: " << (hb ? b : "<eof>") << '\n';
      break;
    }
  }
  return kMismatch;
}

std::string golden_name(const std::string& stem, const Options& o, bool with_base) {
  std::string name = stem;
  if (with_base) name += "-b" + std::to_string(o.base);
  if (o.max_k) name += "-k" + std::to_string(o.max_k);
  if (o.max_n) name += "-n" + std::to_string(o.max_n);
  if (o.l) name += "-l" + std::to_string(o.l);
  const std::string ext = o.format == "csv" ? ".csv" : o.format == "bfile" ? ".b" : ".txt";
  return name + ext;
}

std::string render_terms(const std::vector<Term>& terms, Format f, std::string_view title) {
  std::ostringstream out;
  switch (f) {
    case Format::BFile:
      write_bfile(out, terms, title);
      break;
    case Format::Csv:
      out << "n,value\n";
      for (const auto& t : terms) out << t.index << ',' << t.value << '\n';
      break;
    case Format::Plain:
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? ", " : "") << terms[i].value;
      out << '\n';
      break;
  }
  return out.str();
}

Number arg_number(const std::string& s, const Options& o) { return parse(s, Base{o.base}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dismal (max-min, carry-free) arithmetic toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--base", o.base, "Default base for numbers")->check(CLI::Range(2, 36));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "bfile"}));
  app.add_flag("--online", o.online, "Allow network fetches of reference b-files");
  app.add_flag("--offline", [&](std::int64_t) { o.online = false; }, "Never touch the network (default)");
  app.add_flag("--slow", o.slow, "Lift the default size limits");
  app.add_option("--golden-dir", o.golden_dir, "Directory of golden files for --diff");

  std::string expr, text_a, text_b, name, bfile, anumber;
  int length = 0, bound = 4, max_length = 4;
  bool reduced = false, brute = false, unit_only = false;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression with + and *");
  eval->add_option("expr", expr)->required();

  auto* seq = app.add_subcommand("sequence", "Print terms of a sequence");
  seq->add_option("id", name)->required();
  seq->add_option("--range", o.range, "START:END");
  seq->add_flag("--diff", o.diff);

  auto* table = app.add_subcommand("table", "Regenerate a table");
  table->add_option("name", name)->required()->check(CLI::IsMember(table_names()));
  table->add_option("--max-k", o.max_k);
  table->add_option("--max-n", o.max_n);
  table->add_option("--l", o.l);
  table->add_flag("--diff", o.diff, "Compare with the golden copy");

  auto* primes_cmd = app.add_subcommand("primes", "List the primes of one length");
  primes_cmd->add_option("k", length)->required()->check(CLI::PositiveNumber);

  auto* pi = app.add_subcommand("pi", "Count primes of each length");
  pi->add_option("--max-k", o.max_k);

  auto* tmpl = app.add_subcommand("templates", "List prime templates");
  tmpl->add_option("--max-k", o.max_k);
  tmpl->add_flag("--reduced", reduced, "Fold reversals");

  auto* promote_cmd = app.add_subcommand("promote", "Promote a template to a base");
  promote_cmd->add_option("template", text_a)->required();
  promote_cmd->add_flag("--unit-only", unit_only, "Keep numbers containing the largest digit");

  auto* divs = app.add_subcommand("divisors", "List divisors with d and sigma");
  divs->add_option("n", text_a)->required();

  auto* phi_cmd = app.add_subcommand("phi", "Totient");
  phi_cmd->add_option("n", text_a)->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank in the divisibility poset");
  rank_cmd->add_option("n", text_a)->required();
  rank_cmd->add_option("--bound", bound, "Poset length bound");

  auto* meet_cmd = app.add_subcommand("meet", "Greatest common divisor, if any");
  meet_cmd->add_option("a", text_a)->required();
  meet_cmd->add_option("b", text_b)->required();

  auto* join_cmd = app.add_subcommand("join", "Least common multiple search");
  join_cmd->add_option("a", text_a)->required();
  join_cmd->add_option("b", text_b)->required();
  join_cmd->add_option("--max-length", max_length, "Longest multiple searched");

  auto* parts = app.add_subcommand("partitions", "Partition count");
  parts->add_option("n", text_a)->required();
  parts->add_flag("--brute", brute, "Also enumerate subsets");

  auto* sq = app.add_subcommand("squares", "Census of squares of one length");
  sq->add_option("--length", length)->required();

  auto* sqrtc = app.add_subcommand("sqrtcount", "Square roots of binary repunits");
  sqrtc->add_option("--max-k", o.max_k);

  auto* series = app.add_subcommand("series", "Series coefficients");
  series->add_option("name", name)->required()->check(CLI::IsMember({"DOnes", "DMinus3", "D", "M"}));
  series->add_option("--max-n", o.max_n);
  series->add_option("--l", o.l);

  auto* asym = app.add_subcommand("asym", "Asymptotic report");
  asym->add_option("--max-k", o.max_k);

  auto* check = app.add_subcommand("oeis-check", "Compare a sequence with a b-file");
  check->add_option("id", name)->required();
  check->add_option("bfile", bfile, "Local b-file");
  check->add_option("--oeis", anumber, "A-number to read from the cache or fetch with --online");
  check->add_option("--range", o.range, "Restrict to START:END");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Base base{o.base};
    const Format fmt = parse_format(o.format);

    if (*eval) {
      const bool explicit_base = app.count("--base") > 0;
      std::cout << evaluate(expr, explicit_base ? std::optional<Base>(base) : std::nullopt).to_string() << '\n';
      return kOk;
    }

    if (*seq) {
      const SequenceId id = parse_sequence_id(name);
      const auto [a, b] = parse_range(o.range, 1, 20);
      if (!o.slow && b - a > 100000) throw BudgetExceeded("ranges above 100000 terms need --slow");
      std::vector<Term> terms;
      int code = kOk;
      try {
        for_each_term(id, base, a, b, [&](const Term& t) { terms.push_back(t); });
      } catch (const BudgetExceeded& e) {
        std::cerr << "warning: " << e.what() << "; output is partial\n";
        code = kBudget;
      }
      const std::string title = std::string(sequence_name(id)) + " base " + std::to_string(o.base);
      const std::string stem = std::string(sequence_name(id)) + "-b" + std::to_string(o.base) + "-" +
                               std::to_string(a) + "-" + std::to_string(b);
      const int r = emit_or_diff(o, stem + (fmt == Format::Csv ? ".csv" : fmt == Format::BFile ? ".b" : ".txt"),
                                 render_terms(terms, fmt, title));
      return code != kOk ? code : r;
    }

    if (*table) {
      if (!o.slow && name == "pi" && o.max_k > (o.base == 2 ? 20 : 6)) {
        throw BudgetExceeded("prime counts beyond the default sizes need --slow");
      }
      TableOptions to{base, o.max_k, o.max_n, o.l};
      const bool uses_base = name == "pi" || name == "templates" || name == "divisor-examples";
      return emit_or_diff(o, golden_name(name, o, uses_base), render(make_table(name, to), fmt));
    }

    if (*primes_cmd) {
      for (const Number& p : primes_of_length(base, static_cast<std::size_t>(length))) {
        std::cout << p.digit_string() << '\n';
      }
      return kOk;
    }

    if (*pi) {
      const int max_k = o.max_k ? o.max_k : (o.base == 2 ? 16 : 5);
      if (!o.slow && max_k > (o.base == 2 ? 20 : 6)) throw BudgetExceeded("use --slow beyond the default sizes");
      std::cout << render(make_table("pi", {base, max_k, 0, 0}), fmt);
      return kOk;
    }

    if (*tmpl) {
      const int max_k = o.max_k ? o.max_k : 6;
      if (reduced) {
        for (const auto& t : reduced_templates(static_cast<std::size_t>(max_k))) {
          std::cout << t.digits.digit_string() << '\n';
        }
      } else {
        for (int k = 2; k <= max_k; ++k) {
          for (const auto& t : templates(static_cast<std::size_t>(k))) {
            std::cout << t.digits.digit_string() << (t.is_binary() ? " binary" : "") << '\n';
          }
        }
      }
      return kOk;
    }

    if (*promote_cmd) {
      const Number t = parse(text_a, Base{36});
      const auto out = promote_all({Template{t, true}}, base, unit_only);
      for (const Number& n : out) std::cout << n.digit_string() << '\n';
      std::cerr << out.size() << " numbers\n";
      return kOk;
    }

    if (*divs) {
      const auto r = divisor_list(arg_number(text_a, o));
      for (const Number& d : r.divisors) std::cout << d.to_string() << '\n';
      std::cout << "d = " << r.count << "\nsigma = " << r.sigma.to_string() << '\n';
      return kOk;
    }

    if (*phi_cmd) {
      std::cout << phi(arg_number(text_a, o)) << '\n';
      return kOk;
    }

    if (*rank_cmd) {
      const Number n = arg_number(text_a, o);
      std::cout << PosetView(n.base(), static_cast<std::size_t>(bound)).rank(n) << '\n';
      return kOk;
    }

    if (*meet_cmd) {
      const auto m = meet(arg_number(text_a, o), arg_number(text_b, o));
      std::cout << (m ? m->to_string() : "absent") << '\n';
      return kOk;
    }

    if (*join_cmd) {
      const auto j = join(arg_number(text_a, o), arg_number(text_b, o), static_cast<std::size_t>(max_length));
      switch (j.status) {
        case JoinStatus::Candidate:
          std::cout << j.minimal.front().to_string() << " (no other minimal common multiple up to " << max_length
                    << " digits)\n";
          break;
        case JoinStatus::Absent:
          std::cout << "absent: " << j.minimal.size() << " incomparable minimal common multiples\n";
          for (const Number& m : j.minimal) std::cout << "  " << m.to_string() << '\n';
          break;
        case JoinStatus::Unknown:
          std::cout << "unknown: no common multiple up to " << max_length << " digits\n";
          break;
      }
      return kOk;
    }

    if (*parts) {
      const Number n = arg_number(text_a, o);
      std::cout << partition_count(n).str() << '\n';
      if (brute) {
        const auto b = partition_count_bruteforce(n);
        std::cout << "brute force: " << b << '\n';
        return partition_count(n) == b ? kOk : kMismatch;
      }
      return kOk;
    }

    if (*sq) {
      const auto c = square_census(base, static_cast<std::size_t>(length));
      std::cout << "distinct squares: " << c.distinct << '\n';
      for (const Number& r : c.repeated()) {
        std::cout << r.to_string() << " has " << c.multiplicity.at(r.value()) << " roots\n";
      }
      return kOk;
    }

    if (*sqrtc) {
      const int max_k = o.max_k ? o.max_k : 11;
      if (!o.slow && max_k > 24) throw BudgetExceeded("use --slow beyond k = 24");
      std::vector<Term> terms;
      for (int k = 0; k <= max_k; ++k) {
        terms.push_back({static_cast<std::uint64_t>(k), std::to_string(allones_sqrt_count(k))});
      }
      std::cout << render_terms(terms, fmt, "square roots of 2^(2k+1)-1");
      return kOk;
    }

    if (*series) {
      const auto n = static_cast<std::size_t>(o.max_n ? o.max_n : 16);
      SeriesTable s;
      if (name == "DOnes") {
        s = d2_ones_series(n);
      } else if (name == "DMinus3") {
        s = d2_minus3_series(n);
      } else if (name == "D") {
        s = d_series(o.l ? o.l : 3, n);
      } else {
        s = m_series(o.l ? o.l : 3, n);
      }
      std::vector<Term> terms;
      for (std::size_t i = 0; i < s.size(); ++i) terms.push_back({i, s[i].str()});
      std::cout << render_terms(terms, fmt == Format::Plain ? Format::Csv : fmt, s.name);
      return kOk;
    }

    if (*asym) {
      const auto n = static_cast<std::size_t>(o.max_k ? o.max_k : 100);
      if (!o.slow && n > 1024) throw BudgetExceeded("use --slow beyond k = 1024");
      std::cout << "k,d2_ones,d2_minus3,ratio,theta\n";
      for (const auto& r : asymptotic_report(n)) {
        std::ostringstream line;
        line.precision(8);
        line << r.k << ',' << r.ones.str() << ',' << r.minus3.str() << ',' << r.ratio << ',' << r.theta;
        std::cout << line.str() << '\n';
      }
      return kOk;
    }

    if (*check) {
      const SequenceId id = parse_sequence_id(name);
      std::string text;
      if (!bfile.empty()) {
        std::ifstream in(bfile, std::ios::binary);
        if (!in) throw ParseError("cannot open " + bfile);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else if (!anumber.empty()) {
        text = oeis::load_bfile(anumber, o.online);
      } else {
        throw ParseError("oeis-check needs a b-file path or --oeis");
      }
      std::istringstream in(text);
      auto reference = read_bfile(in);
      if (!o.range.empty()) {
        const auto [a, b] = parse_range(o.range, 0, 0);
        std::erase_if(reference, [&](const Term& t) { return t.index < a || t.index > b; });
      }
      if (reference.empty()) {
        std::cout << "match (no terms to compare)\n";
        return kOk;
      }
      const auto computed = sequence_terms(id, base, reference.front().index, reference.back().index);
      if (const auto m = compare_terms(computed, reference)) {
        std::cout << "mismatch at index " << m->index << ": expected " << m->expected << ", computed "
                  << (m->actual.empty() ? "<missing>" : m->actual) << '\n';
        return kMismatch;
      }
      std::cout << "match " << reference.size() << " terms (" << reference.front().index << ".."
                << reference.back().index << ")\n";
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

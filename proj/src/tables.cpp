#include "dismal/tables.hpp"

#include <algorithm>
#include <sstream>

#include "dismal/divisors.hpp"
#include "dismal/genfunc.hpp"
#include "dismal/primes.hpp"
#include "dismal/structures.hpp"

namespace dismal {

namespace {

int or_default(int v, int fallback) { return v > 0 ? v : fallback; }

Table pi_table(const TableOptions& o) {
  const int max_k = or_default(o.max_k, o.base == kBinary ? 16 : 5);
  Table t{"k-digit primes in base " + std::to_string(o.base.radix()), {"k", "primes", "bound", "necessary"}, {}};
  for (int k = 1; k <= max_k; ++k) {
    const auto c = prime_count(o.base, static_cast<std::size_t>(k));
    t.rows.push_back({std::to_string(k), std::to_string(c.count), std::to_string(c.candidate_bound),
                      std::to_string(c.necessary)});
  }
  return t;
}

Table templates_table(const TableOptions& o) {
  const int max_k = std::min(or_default(o.max_k, 5), 6);
  Table t{"templates and their promotions in base " + std::to_string(o.base.radix()),
          {"k", "binary", "all", "binary_primes", "all_primes"},
          {}};
  for (int k = 2; k <= max_k; ++k) {
    const auto all = templates(static_cast<std::size_t>(k));
    std::vector<Template> bin;
    std::copy_if(all.begin(), all.end(), std::back_inserter(bin), [](const Template& x) { return x.is_binary(); });
    t.rows.push_back({std::to_string(k), std::to_string(bin.size()), std::to_string(all.size()),
                      std::to_string(promote_all(bin, o.base, true).size()),
                      std::to_string(promote_all(all, o.base, true).size())});
  }
  return t;
}

Table d_ones_table(const TableOptions& o) {
  const int max_k = or_default(o.max_k, 7);
  Table t{"divisors of the repunit 11...1 of length k in base b", {"k"}, {}};
  for (int b = 2; b <= 10; ++b) t.header.push_back("b" + std::to_string(b));
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (int b = 2; b <= 10; ++b) row.push_back(d_ones(Base{b}, k).str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table t_table(const TableOptions& o) {
  const int max_k = or_default(o.max_k, 8);
  Table t{"compositions of k into t parts with the first part largest", {"k"}, {}};
  for (int c = 1; c <= max_k; ++c) t.header.push_back("t" + std::to_string(c));
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (int c = 1; c <= max_k; ++c) row.push_back(c <= k ? first_dominant_count(k, c).str() : "");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table m_table(const TableOptions& o) {
  const int max_n = or_default(o.max_n, 12);
  std::vector<int> ls;
  if (o.l > 0) {
    ls.push_back(o.l);
  } else {
    for (int l = 1; l <= 8; ++l) ls.push_back(l);
  }
  Table t{"M(h, l)", {"h"}, {}};
  std::vector<SeriesTable> cols;
  for (int l : ls) {
    t.header.push_back("l" + std::to_string(l));
    cols.push_back(m_series(l, static_cast<std::size_t>(max_n)));
  }
  for (int h = 1; h <= max_n; ++h) {
    std::vector<std::string> row{std::to_string(h)};
    for (const auto& c : cols) row.push_back(c[static_cast<std::size_t>(h)].str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table d_table(const TableOptions& o) {
  const int max_n = or_default(o.max_n, 8);
  std::vector<int> ls;
  if (o.l > 0) {
    ls.push_back(o.l);
  } else {
    for (int l = 3; l <= 6; ++l) ls.push_back(l);
  }
  Table t{"D(n, l)", {"n"}, {}};
  std::vector<SeriesTable> cols;
  for (int l : ls) {
    t.header.push_back("l" + std::to_string(l));
    cols.push_back(d_series(l, static_cast<std::size_t>(max_n)));
  }
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : cols) row.push_back(c[static_cast<std::size_t>(n)].str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table euler_phi_table(const TableOptions& o) {
  const int max_n = or_default(o.max_n, 20);
  Table t{"totients", {"n", "phi2", "phi10"}, {}};
  for (int n = 1; n <= max_n; ++n) {
    t.rows.push_back({std::to_string(n), std::to_string(phi(Number::from_value(n, kBinary))),
                      std::to_string(phi(Number::from_value(n, kDecimal)))});
  }
  return t;
}

Table d2_series_table(const TableOptions& o) {
  const int max_k = or_default(o.max_k, 16);
  const auto ones = d2_ones_series(static_cast<std::size_t>(max_k));
  const auto minus3 = d2_minus3_series(static_cast<std::size_t>(max_k));
  Table t{"binary divisor counts of 2^k - 1 and 2^k - 3", {"k", "d2(2^k-1)", "d2(2^k-3)"}, {}};
  for (int k = 1; k <= max_k; ++k) {
    const auto i = static_cast<std::size_t>(k);
    t.rows.push_back({std::to_string(k), ones[i].str(), k >= 3 ? minus3[i].str() : ""});
  }
  return t;
}

Table divisor_examples_table(const TableOptions& o) {
  const int max_n = or_default(o.max_n, 12);
  Table t{"divisors in base " + std::to_string(o.base.radix()), {"n", "d", "sigma"}, {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto r = divisor_list(Number::from_value(static_cast<std::uint64_t>(n), o.base));
    t.rows.push_back({r.n.digit_string(), std::to_string(r.count), r.sigma.digit_string()});
  }
  return t;
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"pi", "templates", "d-ones", "T", "M",
                                              "D", "euler-phi", "d2-series", "divisor-examples"};
  return names;
}

Table make_table(std::string_view name, const TableOptions& o) {
  if (name == "pi") return pi_table(o);
  if (name == "templates") return templates_table(o);
  if (name == "d-ones") return d_ones_table(o);
  if (name == "T") return t_table(o);
  if (name == "M") return m_table(o);
  if (name == "D") return d_table(o);
  if (name == "euler-phi") return euler_phi_table(o);
  if (name == "d2-series") return d2_series_table(o);
  if (name == "divisor-examples") return divisor_examples_table(o);
  throw ParseError("unknown table '" + std::string(name) + "'");
}

std::string render(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(table.header);
      for (const auto& r : table.rows) line(r);
      break;
    }
    case Format::BFile:
      if (table.header.size() != 2) throw DomainError("b-file output needs a two-column table");
      out << "# " << table.title << '\n';
      for (const auto& r : table.rows) out << r[0] << ' ' << r[1] << '\n';
      break;
    case Format::Plain: {
      std::vector<std::size_t> width(table.header.size(), 0);
      auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
      };
      measure(table.header);
      for (const auto& r : table.rows) measure(r);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += std::string(width[i] - cells[i].size(), ' ') + cells[i];
        }
        out << s << '\n';
      };
      out << "# " << table.title << '\n';
      line(table.header);
      for (const auto& r : table.rows) line(r);
      break;
    }
  }
  return out.str();
}

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "bfile") return Format::BFile;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

}  // namespace dismal

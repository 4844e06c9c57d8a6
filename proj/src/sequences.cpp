#include "dismal/sequences.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "dismal/divisors.hpp"
#include "dismal/genfunc.hpp"
#include "dismal/primes.hpp"
#include "dismal/squares.hpp"
#include "dismal/structures.hpp"

namespace dismal {

namespace {

constexpr std::array kSequences{
    std::pair{SequenceId::Even2xN, "Even2xN"},
    std::pair{SequenceId::EvenSmallestPrime, "EvenSmallestPrime"},
    std::pair{SequenceId::Squares, "Squares"},
    std::pair{SequenceId::Triangular, "Triangular"},
    std::pair{SequenceId::Factorials, "Factorials"},
    std::pair{SequenceId::Primes, "Primes"},
    std::pair{SequenceId::DCount, "DCount"},
    std::pair{SequenceId::Sigma, "Sigma"},
    std::pair{SequenceId::Phi, "Phi"},
    std::pair{SequenceId::Partitions, "Partitions"},
    std::pair{SequenceId::SquareCounts, "SquareCounts"},
    std::pair{SequenceId::SqrtCounts, "SqrtCounts"},
    std::pair{SequenceId::DOnesSeries, "DOnesSeries"},
    std::pair{SequenceId::DMinus3Series, "DMinus3Series"},
};

constexpr auto kIds = [] {
  std::array<SequenceId, kSequences.size()> ids{};
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = kSequences[i].first;
  return ids;
}();

std::string decimal(const Number& n) { return std::to_string(n.value()); }

void require_positive(SequenceId id, std::uint64_t start) {
  if (start == 0) throw DomainError(std::string(sequence_name(id)) + " starts at index 1");
}

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("b-file line " + std::to_string(line) + ": bad index '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::span<const SequenceId> all_sequences() noexcept { return kIds; }

std::string_view sequence_name(SequenceId id) noexcept {
  for (const auto& [k, name] : kSequences) {
    if (k == id) return name;
  }
  return "?";
}

SequenceId parse_sequence_id(std::string_view name) {
  for (const auto& [k, n] : kSequences) {
    if (name == n) return k;
  }
  throw ParseError("unknown sequence '" + std::string(name) + "'");
}

void for_each_term(SequenceId id, Base base, std::uint64_t start, std::uint64_t end,
                   const std::function<void(const Term&)>& emit) {
  if (start > end) return;
  auto num = [&](std::uint64_t n) { return Number::from_value(n, base); };
  auto put = [&](std::uint64_t i, std::string v) { emit(Term{i, std::move(v)}); };

  switch (id) {
    case SequenceId::Even2xN: {
      if (base.radix() < 3) throw DomainError("Even2xN needs the digit 2");
      const Number two(base, {Digit{2}});
      for (auto n = start; n <= end; ++n) put(n, decimal(mul(two, num(n))));
      break;
    }
    case SequenceId::EvenSmallestPrime: {
      const Number p(base, {base.unit_digit(), Digit{1}});
      for (auto n = start; n <= end; ++n) put(n, decimal(mul(p, num(n))));
      break;
    }
    case SequenceId::Squares:
      for (auto n = start; n <= end; ++n) put(n, decimal(square(num(n))));
      break;
    case SequenceId::Triangular: {
      Number acc(base);
      for (std::uint64_t n = 1; n < start; ++n) acc = add(acc, num(n));
      for (auto n = start; n <= end; ++n) {
        acc = add(acc, num(n));
        put(n, decimal(acc));
      }
      break;
    }
    case SequenceId::Factorials: {
      require_positive(id, start);
      Number acc = num(1);
      for (std::uint64_t n = 2; n < start; ++n) acc = mul(acc, num(n));
      for (auto n = start; n <= end; ++n) {
        if (n > 1) acc = mul(acc, num(n));
        put(n, decimal(acc));
      }
      break;
    }
    case SequenceId::Primes: {
      require_positive(id, start);
      std::uint64_t i = 0;
      for (std::size_t k = 2; i < end; ++k) {
        const PrimeSieve sieve(base, k, std::uint64_t{1} << 26);
        for (const Number& p : sieve.primes()) {
          if (++i >= start) put(i, decimal(p));
          if (i == end) break;
        }
      }
      break;
    }
    case SequenceId::DCount:
      require_positive(id, start);
      for (auto n = start; n <= end; ++n) put(n, std::to_string(divisor_count(num(n))));
      break;
    case SequenceId::Sigma:
      require_positive(id, start);
      for (auto n = start; n <= end; ++n) put(n, decimal(divisor_sum(num(n))));
      break;
    case SequenceId::Phi:
      require_positive(id, start);
      for (auto n = start; n <= end; ++n) put(n, std::to_string(phi(num(n))));
      break;
    case SequenceId::Partitions:
      for (auto n = start; n <= end; ++n) put(n, partition_count(num(n)).str());
      break;
    case SequenceId::SquareCounts:
      require_positive(id, start);
      for (auto i = start; i <= end; ++i) put(i, std::to_string(square_census(base, 2 * i - 1).distinct));
      break;
    case SequenceId::SqrtCounts:
      for (auto k = start; k <= end; ++k) put(k, std::to_string(allones_sqrt_count(static_cast<int>(k))));
      break;
    case SequenceId::DOnesSeries:
    case SequenceId::DMinus3Series: {
      require_positive(id, start);
      if (end > 4096) throw BudgetExceeded("series beyond 4096 terms");
      const auto s = id == SequenceId::DOnesSeries ? d2_ones_series(end) : d2_minus3_series(end);
      for (auto k = start; k <= end; ++k) put(k, s[k].str());
      break;
    }
  }
}

std::vector<Term> sequence_terms(SequenceId id, Base base, std::uint64_t start, std::uint64_t end) {
  std::vector<Term> out;
  for_each_term(id, base, start, end, [&](const Term& t) { out.push_back(t); });
  return out;
}

void write_bfile(std::ostream& out, std::span<const Term> terms, std::string_view comment) {
  std::size_t pos = 0;
  while (pos < comment.size()) {
    const auto nl = comment.find('\n', pos);
    out << "# " << comment.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos) << '\n';
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  for (const Term& t : terms) out << t.index << ' ' << t.value << '\n';
}

std::vector<Term> read_bfile(std::istream& in) {
  std::vector<Term> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto sep = line.find_first_of(" \t", first);
    if (sep == std::string::npos) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'index value'");
    }
    const auto vstart = line.find_first_not_of(" \t", sep);
    const auto vend = vstart == std::string::npos ? std::string::npos : line.find_first_of(" \t", vstart);
    if (vstart == std::string::npos || (vend != std::string::npos && line.find_first_not_of(" \t", vend) != std::string::npos)) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'index value'");
    }
    std::string value = line.substr(vstart, vend == std::string::npos ? std::string::npos : vend - vstart);
    const std::string_view digits = std::string_view(value).substr(value.front() == '-' ? 1 : 0);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
    const std::uint64_t index = parse_u64(std::string_view(line).substr(first, sep - first), lineno);
    if (!out.empty() && index != out.back().index + 1) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": index " + std::to_string(index) +
                       " does not follow " + std::to_string(out.back().index));
    }
    out.push_back(Term{index, std::move(value)});
  }
  return out;
}

std::optional<Mismatch> compare_terms(std::span<const Term> computed, std::span<const Term> reference) {
  std::map<std::uint64_t, const std::string*> by_index;
  for (const Term& t : computed) by_index[t.index] = &t.value;
  for (const Term& r : reference) {
    const auto it = by_index.find(r.index);
    if (it == by_index.end()) return Mismatch{r.index, r.value, ""};
    if (*it->second != r.value) return Mismatch{r.index, r.value, *it->second};
  }
  return std::nullopt;
}

}  // namespace dismal

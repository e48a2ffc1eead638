#include "penney/pattern.hpp"

#include <algorithm>

#include "penney/errors.hpp"

namespace penney {

GroupPtr make_group(std::string_view spec, std::size_t order_cap) {
  return std::make_shared<const PermutationGroup>(GroupSpec::parse(spec), order_cap);
}

Pattern::Pattern(GroupPtr group, const Word& w) : group_(std::move(group)) {
  if (!group_) throw InvalidArgument("pattern requires a group");
  word_ = group_->canonical(w);
  stabilizer_ = group_->stabilizer_order(word_);
}

bool Pattern::same_group(const Pattern& other) const {
  return group_ == other.group_ || *group_ == *other.group_;
}

Pattern pattern_of(const GroupPtr& group, const Word& w) { return Pattern(group, w); }

std::uint64_t checked_word_count(std::size_t q, std::size_t length, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (count > budget / q) {
      throw BudgetExceeded(std::to_string(q) + "^" + std::to_string(length) +
                           " words exceed the enumeration budget " + std::to_string(budget));
    }
    count *= q;
  }
  if (count > budget) throw BudgetExceeded("word count exceeds the enumeration budget");
  return count;
}

std::vector<Pattern> enumerate_patterns(const GroupPtr& group, std::size_t length,
                                        std::uint64_t budget) {
  if (length < 1) throw InvalidArgument("pattern length must be at least 1");
  const std::size_t q = group->degree();
  const std::uint64_t total = checked_word_count(q, length, budget);
  auto index_of = [q](const Word& w) {
    std::uint64_t idx = 0;
    for (Letter x : w) idx = idx * q + x;
    return idx;
  };

  // Words visited in lexicographic order: the first unseen member of an orbit
  // is its least member.
  std::vector<bool> seen(total, false);
  std::vector<Pattern> out;
  Word w(length, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!seen[idx]) {
      for (const auto& g : group->elements()) seen[index_of(act(g, w))] = true;
      out.emplace_back(group, w);
    }
    for (std::size_t pos = length; pos-- > 0;) {
      if (++w[pos] < q) break;
      w[pos] = 0;
    }
  }
  return out;
}

namespace {

void require_same_group(const Pattern& p, const Pattern& p2) {
  if (!p.same_group(p2)) throw GroupMismatch("patterns belong to different groups");
}

std::vector<Rational> normalize(const Correlation& entries, std::size_t r) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (auto e : entries) {
    Rational x(static_cast<long>(e), static_cast<unsigned long>(r));
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

}  // namespace

PatternCorrelation correlate_patterns(const Pattern& p, const Pattern& p2) {
  require_same_group(p, p2);
  const auto& group = p.group();
  const Word& v = p.word();
  const Word& w = p2.word();
  const std::size_t len = v.size();
  Correlation entries(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t overlap = std::min(len - i, w.size());
    Word suffix(v.begin() + static_cast<std::ptrdiff_t>(i),
                v.begin() + static_cast<std::ptrdiff_t>(i + overlap));
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(overlap));
    if (group.equivalent(suffix, prefix)) {
      entries[i] = static_cast<std::int64_t>(group.stabilizer_order(suffix) / p.stabilizer_order());
    }
  }
  return {entries, normalize(entries, p.orbit_size())};
}

PatternCorrelation correlate_patterns_orbit_sum(const Pattern& p, const Pattern& p2) {
  require_same_group(p, p2);
  Correlation entries(p.length(), 0);
  for (const Word& v : p.orbit()) {
    Correlation c = correlate(v, p2.word());
    for (std::size_t i = 0; i < c.size(); ++i) entries[i] += c[i];
  }
  return {entries, normalize(entries, p.orbit_size())};
}

Rational cln_pattern(const Pattern& p, const Pattern& p2) {
  return conway_number(correlate_patterns(p, p2).entries, p.group().degree());
}

std::vector<std::size_t> pattern_periods(const Pattern& p) {
  const auto& group = p.group();
  const Word& w = p.word();
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word prefix(w.begin(), w.end() - static_cast<std::ptrdiff_t>(i));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (group.equivalent(prefix, suffix)) out.push_back(i);
  }
  return out;
}

OverlapClass classify_overlap(const Pattern& p) {
  auto periods = pattern_periods(p);
  if (periods.empty()) return OverlapClass::NonSelfOverlapping;
  if (periods.size() == 1 && periods.front() == p.length() - 1) {
    return OverlapClass::AlmostNonSelfOverlapping;
  }
  return OverlapClass::Neither;
}

std::string to_string(OverlapClass c) {
  switch (c) {
    case OverlapClass::NonSelfOverlapping: return "non_self_overlapping";
    case OverlapClass::AlmostNonSelfOverlapping: return "almost_nso";
    case OverlapClass::Neither: return "neither";
  }
  return {};
}

MinClnResult min_cln_search(const GroupPtr& group, std::size_t length, std::uint64_t budget) {
  MinClnResult result;
  bool first = true;
  for (const auto& p : enumerate_patterns(group, length, budget)) {
    Rational value = cln_pattern(p, p);
    if (first || value < result.value) {
      result.value = value;
      result.witnesses.clear();
      first = false;
    }
    if (value == result.value) result.witnesses.push_back(p);
  }
  const std::size_t q = group->degree();
  BigInt base;
  mpz_ui_pow_ui(base.get_mpz_t(), q, length - 1);
  if (group->letter_orbits().size() > 1) {
    result.bound_low = result.bound_high = Rational(base);
  } else {
    result.bound_low = Rational(base + 1);
    result.bound_high = Rational(base + static_cast<unsigned long>(q - 1));
  }
  return result;
}

}  // namespace penney

#include "bps/lenvec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "bps/errors.hpp"

namespace bps {

LengthVector::LengthVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw BadInput("length vector must have r >= 1");
  if (static_cast<int>(entries_.size()) > kMaxRank)
    throw BadInput("length vector rank exceeds " + std::to_string(kMaxRank));
  for (const Rational& e : entries_)
    if (e < 0) throw BadInput("length vector entries must be nonnegative");
  std::sort(entries_.begin(), entries_.end());  // weakly increasing normal form

  Integer lcm_den = 1;
  for (const Rational& e : entries_) {
    Integer d = denominator(e);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  scaled_.reserve(entries_.size());
  for (const Rational& e : entries_)
    scaled_.push_back(numerator(e) * (lcm_den / denominator(e)));

  const int n = r();
  sums_.assign(std::size_t{1} << n, Integer(0));
  for (Mask J = 1; J < sums_.size(); ++J) {
    Mask low = J & (~J + 1);
    sums_[J] = sums_[J ^ low] + scaled_[std::countr_zero(low)];
  }
  total_ = sums_[full_mask(n)];

  for (Mask J = 0; J < sums_.size(); ++J) {
    if (2 * sums_[J] == total_) {
      witness_ = J;
      break;
    }
  }
}

LengthVector LengthVector::parse(const std::string& text) {
  std::vector<Rational> entries;
  std::string token;
  std::istringstream in(text);
  auto flush = [&] {
    if (token.empty()) return;
    try {
      entries.emplace_back(Rational(token));
    } catch (const std::exception&) {
      throw BadInput("cannot parse length entry '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t')
      flush();
    else
      token += ch;
  }
  flush();
  if (entries.empty()) throw BadInput("empty length vector");
  return LengthVector(std::move(entries));
}

Rational LengthVector::subset_sum(Mask J) const {
  Rational s = 0;
  for (int j : elements(J)) s += entries_[j - 1];
  return s;
}

void LengthVector::require_generic() const {
  if (witness_) {
    throw NonGeneric(*witness_, "length vector " + str() +
                                    " is not generic: l(J) = l(J^c) for J = " +
                                    set_to_string(*witness_));
  }
}

bool LengthVector::is_long(Mask J) const {
  require_generic();
  return 2 * sums_[J] > total_;
}

bool LengthVector::is_short(Mask J) const { return !is_long(J); }

int LengthVector::sigma(Mask J) const {
  require_generic();
  int count = 0;
  for (Mask rest = J; rest != 0; rest &= rest - 1) {
    Mask low = rest & (~rest + 1);
    if (2 * sums_[J ^ low] < total_) ++count;
  }
  return count;
}

int LengthVector::mu() const {
  require_generic();
  int best = r() + 1;
  const Mask end = full_mask(r());
  for (Mask J = 1; J <= end; ++J) {
    if (2 * sums_[J] <= total_) continue;  // only long J
    int s = sigma(J);
    if (s > 0 && s < best) best = s;
  }
  // A minimal long set J has sigma(J) = |J| > 0, so the minimum exists.
  return best;
}

std::string LengthVector::str() const {
  std::string s = "(";
  for (int i = 0; i < r(); ++i) {
    if (i) s += ",";
    s += to_string(entries_[i]);
  }
  return s + ")";
}

std::string Chamber::id() const {
  std::string s = "r" + std::to_string(r) + ":";
  for (std::size_t i = 0; i < min_long.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(min_long[i]);
  }
  return s;
}

std::string Chamber::representative_str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < representative.size(); ++i) {
    if (i) s += ",";
    s += representative[i].str();
  }
  return s + ")";
}

Chamber chamber_of(const LengthVector& l) {
  l.require_generic();
  Chamber ch;
  ch.r = l.r();
  ch.representative = l.scaled();
  const Mask end = full_mask(l.r());
  for (Mask J = 0; J <= end; ++J) {
    if (l.is_short(J)) {
      ch.short_family.push_back(J);
      continue;
    }
    // J is long; minimal iff every J\{j} is short.
    bool minimal = true;
    for (Mask rest = J; rest != 0 && minimal; rest &= rest - 1)
      minimal = l.is_short(J ^ (rest & (~rest + 1)));
    if (minimal) ch.min_long.push_back(J);
  }
  return ch;
}

namespace {

void enumerate_weakly_increasing(int r, int max_entry,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(r, 0);
  while (true) {
    fn(v);
    int i = r - 1;
    while (i >= 0 && v[i] == max_entry) --i;
    if (i < 0) break;
    const int next = v[i] + 1;
    for (int j = i; j < r; ++j) v[j] = next;
  }
}

std::map<std::vector<Mask>, Chamber> collect_chambers(int r, int max_entry) {
  std::map<std::vector<Mask>, Chamber> found;
  enumerate_weakly_increasing(r, max_entry, [&](const std::vector<int>& v) {
    std::vector<Rational> entries(v.begin(), v.end());
    LengthVector l(std::move(entries));
    if (!l.is_generic()) return;
    Chamber ch = chamber_of(l);
    found.emplace(ch.min_long, std::move(ch));  // keeps first-seen representative
  });
  return found;
}

}  // namespace

ChamberEnumeration enumerate_chambers(int r, int max_entry) {
  if (r < 1 || r > kMaxRank) throw BadInput("enumerate_chambers: bad rank");
  if (max_entry < 1) throw BadInput("enumerate_chambers: max_entry must be >= 1");
  auto base = collect_chambers(r, max_entry);
  auto wider = collect_chambers(r, max_entry + 2);
  ChamberEnumeration out;
  out.entry_bound = max_entry;
  out.stabilized = base.size() == wider.size();
  out.chambers.reserve(base.size());
  for (auto& [key, ch] : base) out.chambers.push_back(std::move(ch));
  return out;
}

}  // namespace bps

// Copyright 2026 The aucteq Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aucteq/auction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {
namespace {

constexpr double kMassTol = 1e-12;

void check_bids(const BidProfile& bids, int n, const char* what) {
  if (static_cast<int>(bids.size()) != n) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) +
                       " bids, got " + std::to_string(bids.size()));
  }
  for (double b : bids) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw InvalidInput(std::string(what) + ": bids must be finite and >= 0");
    }
  }
}

}  // namespace

AuctionInstance::AuctionInstance(std::vector<double> values,
                                 std::vector<int> tie_priority)
    : values_(std::move(values)), tie_priority_(std::move(tie_priority)) {
  const int n = static_cast<int>(values_.size());
  if (n < 2) {
    throw InvalidInput("AuctionInstance: need at least 2 players");
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw InvalidInput("AuctionInstance: values must be finite and >= 0");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw InvalidInput(
          "AuctionInstance: values must be sorted non-increasing");
    }
  }
  if (tie_priority_.empty()) {
    tie_priority_.resize(n);
    for (int i = 0; i < n; ++i) tie_priority_[i] = i;
  }
  if (static_cast<int>(tie_priority_.size()) != n) {
    throw InvalidInput("AuctionInstance: tie_priority size mismatch");
  }
  tie_rank_.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    int p = tie_priority_[r];
    if (p < 0 || p >= n || tie_rank_[p] != -1) {
      throw InvalidInput(
          "AuctionInstance: tie_priority must be a permutation of the players");
    }
    tie_rank_[p] = r;
  }
}

Outcome outcome(const AuctionInstance& instance, const BidProfile& bids) {
  check_bids(bids, instance.num_players(), "outcome");
  int winner = 0;
  for (int i = 1; i < instance.num_players(); ++i) {
    if (bids[i] > bids[winner] ||
        (bids[i] == bids[winner] &&
         instance.tie_rank(i) < instance.tie_rank(winner))) {
      winner = i;
    }
  }
  return Outcome{winner, bids[winner]};
}

double Atom::max_bid() const {
  double m = 0.0;
  for (double b : bids) m = std::max(m, b);
  return m;
}

double Atom::share_of(int player) const {
  for (const auto& [pl, s] : winner_shares) {
    if (pl == player) return s;
  }
  return 0.0;
}

FiniteEquilibrium::FiniteEquilibrium(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw InvalidInput("FiniteEquilibrium: no atoms");
  }
  const int n = static_cast<int>(atoms_[0].bids.size());
  if (n < 2) {
    throw InvalidInput("FiniteEquilibrium: atoms need at least 2 bids");
  }
  double mass = 0.0;
  for (auto& atom : atoms_) {
    check_bids(atom.bids, n, "FiniteEquilibrium");
    if (!(atom.p > 0.0) || atom.p > 1.0 + kMassTol) {
      throw InvalidInput("FiniteEquilibrium: atom probability outside (0, 1]");
    }
    mass += atom.p;
    const double top = atom.max_bid();
    double share_sum = 0.0;
    std::sort(atom.winner_shares.begin(), atom.winner_shares.end());
    int prev = -1;
    for (const auto& [pl, s] : atom.winner_shares) {
      if (pl < 0 || pl >= n) {
        throw InvalidInput("FiniteEquilibrium: winner share for unknown player");
      }
      if (pl == prev) {
        throw InvalidInput("FiniteEquilibrium: duplicate winner share entry");
      }
      prev = pl;
      if (!(s > 0.0)) {
        throw InvalidInput("FiniteEquilibrium: winner shares must be positive");
      }
      if (atom.bids[pl] != top) {
        throw InvalidInput(
            "FiniteEquilibrium: positive winner share on a non-argmax bidder "
            "(bid " + format_double(atom.bids[pl]) + " < max " +
            format_double(top) + ")");
      }
      share_sum += s;
    }
    if (atom.winner_shares.empty() || std::abs(share_sum - 1.0) > kMassTol) {
      throw InvalidInput(
          "FiniteEquilibrium: winner shares must sum to 1 (got " +
          format_double(share_sum) + ")");
    }
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw InvalidInput(
        "FiniteEquilibrium: atom probabilities sum to " + format_double(mass) +
        ", expected 1 within 1e-12 (rejected, not renormalized)");
  }
  // Distinct profiles, exact comparison.
  std::vector<const BidProfile*> keys;
  keys.reserve(atoms_.size());
  for (const auto& a : atoms_) keys.push_back(&a.bids);
  std::sort(keys.begin(), keys.end(),
            [](const BidProfile* a, const BidProfile* b) { return *a < *b; });
  for (size_t i = 1; i < keys.size(); ++i) {
    if (*keys[i] == *keys[i - 1]) {
      throw InvalidInput(
          "FiniteEquilibrium: duplicate bid profile; merge atoms first");
    }
  }
}

int FiniteEquilibrium::num_players() const {
  return static_cast<int>(atoms_[0].bids.size());
}

AuctionEquilibrium::AuctionEquilibrium(AuctionInstance inst,
                                       FiniteEquilibrium dist)
    : instance(std::move(inst)), distribution(std::move(dist)) {
  if (instance.num_players() != distribution.num_players()) {
    throw InvalidInput(
        "AuctionEquilibrium: instance and distribution disagree on the number "
        "of players");
  }
}

OutcomeSummary summarize(const AuctionInstance& instance,
                         const FiniteEquilibrium& eq) {
  const int n = instance.num_players();
  if (n != eq.num_players()) {
    throw InvalidInput("summarize: instance and equilibrium size mismatch");
  }
  OutcomeSummary out;
  out.win_prob.assign(n, 0.0);
  out.expected_payment.assign(n, 0.0);
  out.utility.assign(n, 0.0);
  for (const Atom& atom : eq.atoms()) {
    for (const auto& [pl, s] : atom.winner_shares) {
      const double w = atom.p * s;
      out.win_prob[pl] += w;
      out.expected_payment[pl] += w * atom.bids[pl];
      out.welfare += w * instance.value(pl);
      out.revenue += w * atom.bids[pl];
    }
  }
  for (int i = 0; i < n; ++i) {
    out.utility[i] = instance.value(i) * out.win_prob[i] -
                     out.expected_payment[i];
  }
  return out;
}

std::vector<Atom> merge_duplicate_atoms(std::vector<Atom> atoms) {
  std::map<BidProfile, Atom> merged;
  for (Atom& atom : atoms) {
    auto [it, fresh] = merged.try_emplace(atom.bids, atom);
    if (fresh) continue;
    Atom& dst = it->second;
    // Probability-weighted share merge.
    std::map<int, double> shares;
    for (const auto& [pl, s] : dst.winner_shares) shares[pl] += dst.p * s;
    for (const auto& [pl, s] : atom.winner_shares) shares[pl] += atom.p * s;
    dst.p += atom.p;
    dst.winner_shares.clear();
    for (const auto& [pl, w] : shares) {
      dst.winner_shares.emplace_back(pl, w / dst.p);
    }
  }
  std::vector<Atom> out;
  out.reserve(merged.size());
  for (auto& [key, atom] : merged) out.push_back(std::move(atom));
  return out;
}

FiniteEquilibrium perturb_to_strict(const FiniteEquilibrium& eq,
                                    double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidInput("perturb_to_strict: epsilon must be positive");
  }
  std::vector<Atom> out;
  out.reserve(eq.atoms().size());
  for (const Atom& atom : eq.atoms()) {
    const double top = atom.max_bid();
    int at_max = 0;
    for (double b : atom.bids) at_max += (b == top);
    if (at_max == 1) {
      out.push_back(atom);
      continue;
    }
    // One child per positive-share winner; that winner outbids the old tie.
    for (const auto& [pl, s] : atom.winner_shares) {
      Atom child;
      child.p = atom.p * s;
      child.bids = atom.bids;
      child.bids[pl] = top + epsilon;
      child.winner_shares = {{pl, 1.0}};
      out.push_back(std::move(child));
    }
  }
  return FiniteEquilibrium(merge_duplicate_atoms(std::move(out)));
}

}  // namespace aucteq

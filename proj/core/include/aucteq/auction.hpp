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
//
// Full-information first-price single-item auctions: instances, bid
// profiles, finite joint bid distributions, and their outcome statistics.
//
// Conventions used throughout the library:
//  * players are 0-based indices into `values`, sorted non-increasing, so
//    player 0 is always a highest-value player (JSON uses 1-based ids);
//  * bid and tie comparisons are exact floating-point comparisons; two bids
//    tie iff their doubles are identical;
//  * probability data is validated to 1e-12 and rejected when off, never
//    renormalized.

#ifndef AUCTEQ_AUCTION_HPP_
#define AUCTEQ_AUCTION_HPP_

#include <utility>
#include <vector>

namespace aucteq {

using BidProfile = std::vector<double>;

// One-item first-price auction with complete information.
class AuctionInstance {
 public:
  // `values` must be non-increasing, non-negative, size >= 2.
  // `tie_priority` lists player ids, most-preferred first; empty means
  // value order (0, 1, ..., n-1). Must be a permutation of 0..n-1.
  explicit AuctionInstance(std::vector<double> values,
                           std::vector<int> tie_priority = {});

  int num_players() const { return static_cast<int>(values_.size()); }
  double value(int player) const { return values_[player]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<int>& tie_priority() const { return tie_priority_; }
  // Smaller rank wins ties.
  int tie_rank(int player) const { return tie_rank_[player]; }

 private:
  std::vector<double> values_;
  std::vector<int> tie_priority_;
  std::vector<int> tie_rank_;
};

struct Outcome {
  int winner;    // argmax bidder, ties broken by tie_priority
  double price;  // the winning bid
};

// Deterministic outcome of one bid profile. Bids must be non-negative and
// match the instance size.
Outcome outcome(const AuctionInstance& instance, const BidProfile& bids);

// A point of a finite joint bid distribution. `winner_shares` lists
// (player, share) pairs with positive shares summing to 1; every listed
// player must bid exactly the atom's maximum bid. Fractional shares model
// randomized tie-breaking inside the atom.
struct Atom {
  double p = 0.0;
  BidProfile bids;
  std::vector<std::pair<int, double>> winner_shares;

  double max_bid() const;
  // Share of `player`, 0 when absent.
  double share_of(int player) const;
};

// Finite joint distribution over bid profiles.
// Invariants, enforced at construction:
//  * at least one atom; all atoms have the same number of bidders (>= 2);
//  * each p in (0, 1], total mass within 1e-12 of 1;
//  * bid profiles are pairwise distinct (exact comparison);
//  * winner shares are positive, sum to 1 within 1e-12, and sit only on
//    argmax bidders of their atom.
class FiniteEquilibrium {
 public:
  explicit FiniteEquilibrium(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  int num_players() const;

 private:
  std::vector<Atom> atoms_;
};

// An instance together with a joint distribution over its bid profiles.
struct AuctionEquilibrium {
  AuctionEquilibrium(AuctionInstance inst, FiniteEquilibrium dist);

  AuctionInstance instance;
  FiniteEquilibrium distribution;
};

struct OutcomeSummary {
  std::vector<double> win_prob;
  std::vector<double> expected_payment;
  std::vector<double> utility;  // value*win_prob - payment, per player
  double welfare = 0.0;         // expected winner value
  double revenue = 0.0;         // expected winning bid
};

// Probability-weighted aggregation over atoms using winner shares.
OutcomeSummary summarize(const AuctionInstance& instance,
                         const FiniteEquilibrium& eq);

// Splits every atom with a tie at the maximum into one atom per
// positive-share winner (weighted by the shares) and raises that winner's
// bid by epsilon. The result has a strict argmax in every atom, so outcomes
// no longer depend on any tie-breaking convention. Welfare is unchanged;
// revenue moves by at most epsilon. Duplicate profiles created by the split
// are merged.
FiniteEquilibrium perturb_to_strict(const FiniteEquilibrium& eq,
                                    double epsilon);

// Merges atoms with identical bid profiles, summing probabilities and
// averaging winner shares with probability weights. No-op when profiles are
// already distinct (which FiniteEquilibrium guarantees); used on raw atom
// lists before construction.
std::vector<Atom> merge_duplicate_atoms(std::vector<Atom> atoms);

}  // namespace aucteq

#endif  // AUCTEQ_AUCTION_HPP_

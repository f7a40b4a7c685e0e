#pragma once

#include <span>
#include <vector>

#include "guessing/types.hpp"

namespace guessing {

// Payoffs for a realized target value r. Winners split the pot: k tied
// winners each net n/k - 1, everyone else nets -1. Under PriceIsRight a
// guess wins only if it does not exceed r; if all guesses exceed r, every
// payoff is 0. A guess exactly equal to r counts as a winner.
std::vector<double> realized_payoffs(const GameSpec& spec, const GuessProfile& guesses,
                                     double r);

// Non-allocating variant; out must have guesses.size() entries.
void realized_payoffs_into(Rule rule, std::span<const double> guesses, double r,
                           std::span<double> out);

// Payoff to the first guesser only.
double realized_payoff_first(Rule rule, std::span<const double> guesses, double r);

// Exact expectation over r uniform on [0,1], computed by sorting the guesses
// and integrating the piecewise-constant payoff in closed form. Requires the
// uniform-unit target; for general targets map the guesses through G first.
std::vector<double> expected_payoffs(const GameSpec& spec, const GuessProfile& guesses);

}  // namespace guessing

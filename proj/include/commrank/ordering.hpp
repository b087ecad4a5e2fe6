#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "commrank/centrality.hpp"
#include "commrank/errors.hpp"
#include "commrank/rng.hpp"

namespace commrank {

enum class Strategy { random, natural, degree, pagerank, closeness, betweenness, combined };

/// How nodes with exactly equal scores are ordered among themselves.
/// `stable` keeps natural index order; `random` shuffles each tied group
/// with the run's seeded stream.
enum class TieMode { stable, random };

/// A visit order: a permutation of 0..n-1 plus the provenance that
/// produced it.
struct NodeOrder {
    std::vector<int> sequence;
    Strategy strategy;
    TieMode tie_mode;
};

/// CLI tokens for strategies and tie modes.
inline const char* strategy_token(Strategy s) {
    switch (s) {
        case Strategy::random: return "random";
        case Strategy::natural: return "natural";
        case Strategy::degree: return "deg";
        case Strategy::pagerank: return "pag";
        case Strategy::closeness: return "clo";
        case Strategy::betweenness: return "bet";
        case Strategy::combined: return "my";
    }
    return "?";
}

inline Strategy strategy_from_token(const std::string& token) {
    for (Strategy s : {Strategy::random, Strategy::natural, Strategy::degree, Strategy::pagerank,
                       Strategy::closeness, Strategy::betweenness, Strategy::combined})
        if (token == strategy_token(s)) return s;
    throw InvalidInput("unknown ordering strategy '" + token + "'");
}

inline const char* tie_mode_token(TieMode t) {
    return t == TieMode::stable ? "stable" : "randomtie";
}

inline TieMode tie_mode_from_token(const std::string& token) {
    if (token == "stable") return TieMode::stable;
    if (token == "randomtie") return TieMode::random;
    throw InvalidInput("unknown tie mode '" + token + "'");
}

namespace detail {

inline Strategy strategy_of(Measure m) {
    switch (m) {
        case Measure::degree: return Strategy::degree;
        case Measure::pagerank: return Strategy::pagerank;
        case Measure::closeness: return Strategy::closeness;
        case Measure::betweenness: return Strategy::betweenness;
        case Measure::combined: return Strategy::combined;
    }
    return Strategy::natural;
}

/// Shuffles every maximal run of key-equal positions in `seq`.
template <typename Equal>
void shuffle_ties(std::vector<int>& seq, Rng& rng, Equal equal) {
    std::size_t run = 0;
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        if (i == seq.size() || !equal(seq[run], seq[i])) {
            if (i - run > 1) rng.shuffle_range(seq, run, i);
            run = i;
        }
    }
}

}  // namespace detail

/// Sorts nodes by score, lowest first. Scores are compared exactly; they
/// come from one deterministic computation, so equal means equal.
inline NodeOrder ascending_order(const CentralityScores& scores, TieMode tie_mode, Rng& rng) {
    for (double v : scores.values)
        if (!std::isfinite(v)) throw InvalidInput("scores must be finite");
    std::vector<int> seq(scores.values.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
        return scores.values[static_cast<std::size_t>(a)] <
               scores.values[static_cast<std::size_t>(b)];
    });
    if (tie_mode == TieMode::random)
        detail::shuffle_ties(seq, rng, [&](int a, int b) {
            return scores.values[static_cast<std::size_t>(a)] ==
                   scores.values[static_cast<std::size_t>(b)];
        });
    return {std::move(seq), detail::strategy_of(scores.measure), tie_mode};
}

/// The "my" ordering: ascending by (betweenness, closeness) lexicographically.
/// Equivalent to sorting by bet + relative closeness whenever betweenness is
/// integer-valued, and it keeps the betweenness-first intent exact even when
/// fractional betweenness values sit closer together than the closeness term
/// could separate.
inline NodeOrder ascending_order_combined(const CentralityScores& bet,
                                          const CentralityScores& clo, TieMode tie_mode,
                                          Rng& rng) {
    if (bet.measure != Measure::betweenness || clo.measure != Measure::closeness)
        throw InvalidInput("ascending_order_combined expects (betweenness, closeness) scores");
    if (bet.values.size() != clo.values.size())
        throw InvalidInput("score vectors disagree on node count");
    auto key = [&](int v) {
        return std::make_pair(bet.values[static_cast<std::size_t>(v)],
                              clo.values[static_cast<std::size_t>(v)]);
    };
    std::vector<int> seq(bet.values.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) { return key(a) < key(b); });
    if (tie_mode == TieMode::random)
        detail::shuffle_ties(seq, rng, [&](int a, int b) { return key(a) == key(b); });
    return {std::move(seq), Strategy::combined, tie_mode};
}

/// Uniformly random permutation from the seeded stream.
inline NodeOrder random_order(int n, Rng& rng) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    rng.shuffle(seq);
    return {std::move(seq), Strategy::random, TieMode::stable};
}

/// Identity permutation: the order nodes were added to the graph.
inline NodeOrder natural_order(int n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    return {std::move(seq), Strategy::natural, TieMode::stable};
}

}  // namespace commrank

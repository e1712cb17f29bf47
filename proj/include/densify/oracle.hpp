#ifndef DENSIFY_ORACLE_HPP
#define DENSIFY_ORACLE_HPP

#include <cstddef>
#include <stdexcept>

#include "densify/chain.hpp"
#include "densify/graph.hpp"

// Exhaustive reference implementations. Everything here is exponential in
// the vertex count and refuses graphs above a hard cap.
namespace densify::oracle {

inline constexpr std::size_t kDensestCap = 20;
inline constexpr std::size_t kChainCap = 14;

class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

struct Densest {
    VertexSet set;
    Rational density;
};

/// Nonempty subset of maximum density, largest cardinality on ties.
Densest brute_densest(const Graph& g);

/// B_i = argmax over W strictly containing B_{i-1} of d(W, B_{i-1}),
/// largest W on ties, from B_0 = {} until V.
Chain brute_locally_dense_chain(const Graph& g);

/// True when no nonempty X <= W and nonempty Y disjoint from W satisfy
/// d(X, W \ X) <= d(Y, W). W = V is vacuously locally dense.
bool is_locally_dense(const Graph& g, const VertexSet& w);

/// Largest maximizer of |E(W)| - alpha |W| over anchor <= W <= universe.
VertexSet brute_compact(const Graph& g, const Rational& alpha, const VertexSet& anchor, const VertexSet& universe);

}  // namespace densify::oracle

#endif  // DENSIFY_ORACLE_HPP

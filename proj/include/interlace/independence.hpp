#pragma once

#include <cstdint>
#include <functional>

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Independence number together with the number of maximum independent sets
// (the degree and leading coefficient of I(G;x)).
struct AlphaResult {
    int c = 0;
    BigInt max_count = 0;
};

AlphaResult alpha_bruteforce(const Graph& g, int max_vertices = 24);

enum class NoiseMode { exact, random_within_bound, adversarial_at_bound };

// Simulated approximate evaluator for I(.;lambda): the exact value times a
// seeded multiplicative factor within [2^-b, 2^b], where b is the ceiled
// bound exponent (nl)^(1-eps). adversarial_at_bound pins the factor to
// exactly 2^b or 2^-b.
struct NoisyOracleConfig {
    QSqrt2 lambda;
    BigRational epsilon; // in (0,1)
    std::uint64_t seed = 0;
    NoiseMode mode = NoiseMode::exact;
};

enum class AmplificationKind { clone, comb };

// Choice of amplification for a graph with n vertices: the minimal l such
// that (nl)^(1-eps) >= n^2 and the amplified point xi satisfies
// |xi| > 2^(2B+n+2) with B = ceil((nl)^(1-eps)). Cloning is used when
// |1+lambda| > 1 (xi = (1+lambda)^l - 1), combs when 0 < |1+lambda| < 1
// (xi = lambda/(1+lambda)^l).
struct Amplification {
    AmplificationKind kind = AmplificationKind::clone;
    long l = 0;
    QSqrt2 xi;
    BigInt bound_exponent; // B
};

Amplification choose_amplification(int n, const QSqrt2& lambda, const BigRational& epsilon);

// B = ceil((n*l)^(1-eps)) by exact integer root bounding.
BigInt amplification_bound_exponent(int n, long l, const BigRational& epsilon);

// The amplified graph G_l is represented symbolically: materializing it is
// hopeless (cloning squares the edge count l^2 times), while its independent
// set polynomial values follow exactly from the base graph through the
// transformation identities.
struct AmplifiedInstance {
    const Graph* base = nullptr;
    AmplificationKind kind = AmplificationKind::clone;
    long l = 0;
};

// Oracle contract: returns an approximation of I(G_l;lambda) within the
// configured multiplicative bound.
using AmplifiedOracle = std::function<QSqrt2(const AmplifiedInstance&)>;

// Exact I(G_l;lambda) through the clone/comb identities
//   I(G_l;lambda) = I(G;(1+lambda)^l - 1)                    (clone)
//   I(G_l;lambda) = (1+lambda)^(l n) I(G;lambda/(1+lambda)^l) (comb).
QSqrt2 exact_amplified_I(const AmplifiedInstance& inst, const QSqrt2& lambda);

// The seeded multiplicative perturbation applied by the noisy oracle.
BigRational noise_factor(const NoisyOracleConfig& cfg, int n, long l, const BigInt& bound_exp);

QSqrt2 noisy_oracle(const AmplifiedInstance& inst, const NoisyOracleConfig& cfg);

// Oracle factory honoring cfg.mode.
AmplifiedOracle make_amplified_oracle(const NoisyOracleConfig& cfg);

struct AlphaCandidate {
    int c = 0;
    QSqrt2 n_estimate;
    long l = 0;
};

// Degree recovery from one approximate evaluation at the amplified point:
// scans c~ in 1..n for the unique candidate with
//   2^(-B-1) <= |I~(G;xi)/xi^c~| <= 2^(B+n+1).
// Raises DomainError when no unique candidate exists (the oracle broke its
// accuracy contract).
AlphaCandidate recover_alpha(const Graph& g, const NoisyOracleConfig& cfg,
                             const AmplifiedOracle& oracle);

} // namespace interlace

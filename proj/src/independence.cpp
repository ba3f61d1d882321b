#include "interlace/independence.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <random>

#include "interlace/interlace_eval.hpp"

namespace interlace {

AlphaResult alpha_bruteforce(const Graph& g, int max_vertices) {
    if (!g.loopless()) throw DomainError("independence number requires a loopless graph");
    int n = g.vertex_count();
    if (n > max_vertices || n > 63)
        throw SizeCapError("alpha_bruteforce: " + std::to_string(n) + " vertices exceeds the cap of " +
                           std::to_string(std::min(max_vertices, 63)));
    auto adj = g.adjacency_rows();
    AlphaResult best{0, 1}; // the empty set
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        bool independent = true;
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & mask) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        int size = std::popcount(mask);
        if (size > best.c) {
            best.c = size;
            best.max_count = 1;
        } else if (size == best.c) {
            ++best.max_count;
        }
    }
    return best;
}

namespace {

void check_epsilon(const BigRational& epsilon) {
    if (epsilon <= 0 || epsilon >= 1) throw DomainError("epsilon must lie strictly between 0 and 1");
    if (den(epsilon) > 64) throw DomainError("epsilon denominator too large for exact root bounding");
}

// |1+lambda| classification; throws when |1+lambda| is 0 or 1 (i.e. lambda
// in {-2,-1,0}), where neither amplification grows the point.
AmplificationKind amplification_kind(const QSqrt2& lambda) {
    QSqrt2 t = QSqrt2(1) + lambda;
    if (t.is_zero()) throw DomainError("invalid lambda: 1+lambda = 0");
    int c = cmp(t.abs(), QSqrt2(1));
    if (c == 0) throw DomainError("invalid lambda: |1+lambda| = 1");
    return c > 0 ? AmplificationKind::clone : AmplificationKind::comb;
}

// Compares |x| against 2^e using cheap rational envelopes (1 <= sqrt2 <= 2)
// before falling back to the exact sign rule.
bool abs_exceeds_pow2(const QSqrt2& x, long e) {
    QSqrt2 y = x.abs();
    BigRational threshold = pow2_rational(e);
    const BigRational& c = y.rat();
    const BigRational& d = y.irr();
    BigRational low = c + (sign_of(d) >= 0 ? d : 2 * d);
    BigRational high = c + (sign_of(d) >= 0 ? 2 * d : d);
    if (low > threshold) return true;
    if (high <= threshold) return false;
    return (y - QSqrt2(threshold)).sign() > 0;
}

long to_long_exponent(const BigInt& b) {
    if (b > BigInt(1) << 40) throw SizeCapError("amplification bound exponent is unreasonably large");
    return static_cast<long>(b);
}

} // namespace

BigInt amplification_bound_exponent(int n, long l, const BigRational& epsilon) {
    check_epsilon(epsilon);
    // eps = p/q; (nl)^(1-eps) = ((nl)^(q-p))^(1/q), rounded up.
    BigInt p = num(epsilon), q = den(epsilon);
    unsigned qe = static_cast<unsigned>(q);
    unsigned qp = static_cast<unsigned>(q - p);
    BigInt v = BigInt(n) * l;
    return ceil_nth_root(pow(v, qp), qe);
}

Amplification choose_amplification(int n, const QSqrt2& lambda, const BigRational& epsilon) {
    check_epsilon(epsilon);
    if (n < 1) throw DomainError("amplification needs a nonempty graph");

    // The scan is a pure function of (n, lambda, epsilon); recovery runs over
    // a corpus hit the same parameters over and over.
    static std::mutex cache_mutex;
    static std::map<std::string, Amplification> cache;
    std::string key = std::to_string(n) + "|" + qsqrt2_str(lambda) + "|" + rational_str(epsilon);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    AmplificationKind kind = amplification_kind(lambda);

    BigInt p = num(epsilon), q = den(epsilon);
    unsigned qe = static_cast<unsigned>(q);
    unsigned qp = static_cast<unsigned>(q - p);
    BigInt n2q = pow(BigInt(n), 2 * qe); // (n^2)^q, for (nl)^(q-p) >= n^(2q)

    QSqrt2 t = QSqrt2(1) + lambda;
    QSqrt2 pow_t(1);
    for (long l = 1;; ++l) {
        pow_t *= t;
        BigInt v = BigInt(n) * l;
        if (pow(v, qp) < n2q) continue; // (nl)^(1-eps) >= n^2 not yet reached
        BigInt bound = ceil_nth_root(pow(v, qp), qe);
        long e = to_long_exponent(2 * bound + n + 2);
        QSqrt2 xi = kind == AmplificationKind::clone ? pow_t - QSqrt2(1)
                                                     : lambda * pow_t.inverse();
        if (abs_exceeds_pow2(xi, e)) {
            Amplification amp{kind, l, xi, bound};
            std::lock_guard<std::mutex> lock(cache_mutex);
            cache.emplace(key, amp);
            return amp;
        }
    }
}

QSqrt2 exact_amplified_I(const AmplifiedInstance& inst, const QSqrt2& lambda) {
    const Graph& g = *inst.base;
    UniPoly ipoly = independent_set_poly(g);
    QSqrt2 t = QSqrt2(1) + lambda;
    if (inst.kind == AmplificationKind::clone) {
        QSqrt2 xi = t.pow(inst.l) - QSqrt2(1);
        return ipoly.eval(xi);
    }
    QSqrt2 xi = lambda * t.pow(inst.l).inverse();
    return t.pow(inst.l * g.vertex_count()) * ipoly.eval(xi);
}

BigRational noise_factor(const NoisyOracleConfig& cfg, int n, long l, const BigInt& bound_exp) {
    if (cfg.mode == NoiseMode::exact) return BigRational(1);
    long b = to_long_exponent(bound_exp);
    if (b == 0) return BigRational(1);
    std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l)};
    std::mt19937_64 rng(seq);
    if (cfg.mode == NoiseMode::adversarial_at_bound)
        return pow2_rational((rng() & 1) ? b : -b);
    // Uniform exponent in [-b, b-1] plus a mantissa in [1,2) keeps the
    // factor inside [2^-b, 2^b).
    std::uint64_t span = 2 * static_cast<std::uint64_t>(b);
    long e = static_cast<long>(rng() % span) - b;
    BigInt mant = (BigInt(1) << 62) + BigInt(rng() & ((std::uint64_t{1} << 62) - 1));
    return pow2_rational(e) * BigRational(mant, BigInt(1) << 62);
}

QSqrt2 noisy_oracle(const AmplifiedInstance& inst, const NoisyOracleConfig& cfg) {
    QSqrt2 exact = exact_amplified_I(inst, cfg.lambda);
    int n = inst.base->vertex_count();
    BigInt bound = amplification_bound_exponent(n, inst.l, cfg.epsilon);
    return exact * QSqrt2(noise_factor(cfg, n, inst.l, bound));
}

AmplifiedOracle make_amplified_oracle(const NoisyOracleConfig& cfg) {
    if (cfg.mode == NoiseMode::exact)
        return [lambda = cfg.lambda](const AmplifiedInstance& inst) {
            return exact_amplified_I(inst, lambda);
        };
    return [cfg](const AmplifiedInstance& inst) { return noisy_oracle(inst, cfg); };
}

AlphaCandidate recover_alpha(const Graph& g, const NoisyOracleConfig& cfg,
                             const AmplifiedOracle& oracle) {
    if (!g.loopless()) throw DomainError("recover_alpha requires a loopless graph");
    int n = g.vertex_count();
    if (n < 1) throw DomainError("recover_alpha needs a nonempty graph");

    Amplification amp = choose_amplification(n, cfg.lambda, cfg.epsilon);
    AmplifiedInstance inst{&g, amp.kind, amp.l};
    QSqrt2 approx_gl = oracle(inst);

    // Pull the oracle value back to an approximation of I(G;xi).
    QSqrt2 approx_at_xi = approx_gl;
    if (amp.kind == AmplificationKind::comb) {
        QSqrt2 t = QSqrt2(1) + cfg.lambda;
        approx_at_xi = approx_gl * t.pow(amp.l * n).inverse();
    }

    long b = to_long_exponent(amp.bound_exponent);
    QSqrt2 lo(pow2_rational(-b - 1));
    QSqrt2 hi(pow2_rational(b + n + 1));

    // The bounds are tested in the cross-multiplied form
    //   lo * |xi|^c <= |approx| <= hi * |xi|^c,
    // which keeps every intermediate an integer (or a power-of-two multiple
    // of one) instead of reducing gigantic fractions per candidate.
    int found_c = 0;
    int hits = 0;
    QSqrt2 abs_approx = approx_at_xi.abs();
    QSqrt2 abs_xi = amp.xi.abs();
    QSqrt2 xi_pow = abs_xi;
    for (int c = 1; c <= n; ++c) {
        if (cmp(abs_approx, lo * xi_pow) >= 0 && cmp(abs_approx, hi * xi_pow) <= 0) {
            ++hits;
            found_c = c;
        }
        if (c < n) xi_pow *= abs_xi;
    }
    if (hits != 1)
        throw DomainError("degree recovery failed: " + std::to_string(hits) +
                          " candidates satisfied the bounds; the oracle violated its accuracy contract");
    return {found_c, approx_at_xi * amp.xi.pow(found_c).inverse(), amp.l};
}

} // namespace interlace

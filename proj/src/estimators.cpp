#include "effbayes/estimators.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

Rational lrf(const SampleString& x, size_t n) {
    if (n == 0 || n > x.size()) throw Error("lrf needs 1 <= n <= |x|");
    Rational sum(0);
    for (size_t i = 0; i < n; ++i) sum += Rational(static_cast<long>(x[i]));
    return sum / Rational(static_cast<long>(n));
}

Rational lrf_coordinate(const SampleString& x, Symbol j, size_t n) {
    if (n == 0 || n > x.size()) throw Error("lrf needs 1 <= n <= |x|");
    long count = 0;
    for (size_t i = 0; i < n; ++i) count += (x[i] == j);
    return Rational(count, static_cast<long>(n));
}

MomentPair moments(const Prior& prior) {
    return prior.moments();
}

Rational bernoulli_deviation_prob(const Rational& theta, unsigned n, const Rational& eps) {
    if (theta.sign() < 0 || theta > Rational(1)) throw Error("theta outside [0,1]");
    if (n == 0) throw Error("need n >= 1");
    // degenerate rates: f_n = theta surely
    if (theta.is_zero() || theta == Rational(1)) return Rational(0);

    // count-of-ones grouping with an incremental integer term:
    // term_i = C(n,i) a^i (d-a)^(n-i), probability = term_i / d^n
    mpz_class a = theta.numerator();
    mpz_class d = theta.denominator();
    mpz_class b = d - a;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), b.get_mpz_t(), n);
    mpz_class hits(0);
    for (unsigned i = 0;; ++i) {
        Rational freq(static_cast<long>(i), static_cast<long>(n));
        if (abs(freq - theta) > eps) hits += term;
        if (i == n) break;
        // term *= (n-i)/(i+1) * a/b, exactly
        term *= static_cast<unsigned long>(n - i);
        term *= a;
        mpz_class div = mpz_class(static_cast<unsigned long>(i + 1)) * b;
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), div.get_mpz_t());
    }
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
    return Rational(hits, dn);
}

ChebyshevResult chebyshev_check(const Prior& prior, const Rational& eps, unsigned n) {
    if (eps.sign() <= 0) throw Error("eps must be positive");
    if (!prior.is_atomic()) throw Error("exact mode needs an atomic prior (use the Monte Carlo mode)");
    if (static_cast<unsigned long long>(n + 1) * prior.atoms().size() > (1ULL << 22))
        throw ExplosionGuard("(n+1) x atoms too large");

    Rational lhs(0);
    for (const auto& atom : prior.atoms()) {
        const auto* u = std::get_if<UnitPoint>(&atom.point);
        if (!u) throw SpaceMismatch("chebyshev check needs a prior on [0,1]");
        lhs += atom.weight * bernoulli_deviation_prob(u->value, n, eps);
    }
    MomentPair m = prior.moments();
    Rational rhs = (m.alpha - m.beta) / (eps * eps * Rational(static_cast<long>(n)));
    return {lhs, rhs, lhs <= rhs};
}

namespace {

// Inverse CDF of a polynomial density by bisection; dyadic output.
Rational sample_from_density(const Polynomial& density, const Rational& u, unsigned bits) {
    Rational lo(0), hi(1);
    Polynomial one = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < bits; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        if (density.integrate(Rational(0), mid) < u)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Rational binomial_tail_ge(unsigned k, unsigned n, const Rational& p) {
    // P(Bin(n,p) >= k), exact
    if (k == 0) return Rational(1);
    if (p.is_zero()) return Rational(0);
    if (p == Rational(1)) return Rational(1);
    mpz_class a = p.numerator(), d = p.denominator(), b = d - a;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), b.get_mpz_t(), n);
    mpz_class acc(0);
    for (unsigned i = 0;; ++i) {
        if (i >= k) acc += term;
        if (i == n) break;
        term *= static_cast<unsigned long>(n - i);
        term *= a;
        mpz_class div = mpz_class(static_cast<unsigned long>(i + 1)) * b;
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), div.get_mpz_t());
    }
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
    return Rational(acc, dn);
}

}  // namespace

std::pair<Rational, Rational> clopper_pearson(unsigned k, unsigned n, const Rational& alpha,
                                              unsigned precision_bits) {
    if (n == 0 || k > n) throw Error("clopper_pearson needs 0 <= k <= n, n >= 1");
    Rational half = alpha / Rational(2);

    Rational lo(0);
    if (k > 0) {
        // P(Bin(n,p) >= k) increases in p; find p with tail = alpha/2, round down
        Rational a(0), b(1);
        for (unsigned i = 0; i < precision_bits; ++i) {
            Rational mid = (a + b) / Rational(2);
            if (binomial_tail_ge(k, n, mid) < half)
                a = mid;
            else
                b = mid;
        }
        lo = a;
    }
    Rational hi(1);
    if (k < n) {
        // P(Bin(n,p) <= k) = 1 - P(>= k+1) decreases in p; round up
        Rational a(0), b(1);
        for (unsigned i = 0; i < precision_bits; ++i) {
            Rational mid = (a + b) / Rational(2);
            Rational tail_le = Rational(1) - binomial_tail_ge(k + 1, n, mid);
            if (tail_le > half)
                a = mid;
            else
                b = mid;
        }
        hi = b;
    }
    return {lo, hi};
}

ChebyshevMcResult chebyshev_check_mc(const Prior& prior, const Rational& eps, unsigned n,
                                     unsigned replicas, Rng& rng) {
    if (prior.is_atomic()) throw Error("Monte Carlo mode is for density priors");
    if (replicas == 0) throw Error("need replicas >= 1");
    unsigned hits = 0;
    for (unsigned r = 0; r < replicas; ++r) {
        Rational theta = sample_from_density(prior.density(), rng.next_unit(), 40);
        long ones = 0;
        for (unsigned i = 0; i < n; ++i)
            if (!(rng.next_unit() < Rational(1) - theta)) ++ones;
        Rational dev = abs(Rational(ones, static_cast<long>(n)) - theta);
        if (dev > eps) ++hits;
    }
    MomentPair m = prior.moments();
    Rational rhs = (m.alpha - m.beta) / (eps * eps * Rational(static_cast<long>(n)));
    auto [lo, hi] = clopper_pearson(hits, replicas, Rational(1, 100));
    Rational est(static_cast<long>(hits), static_cast<long>(replicas));
    return {est, lo, hi, rhs, replicas, hits, lo <= rhs};
}

DoobMaximalResult doob_maximal_check(const JointMeasure& jm, const std::vector<SampleString>& b_cylinders,
                                     size_t depth) {
    // normalize B to an antichain (drop cylinders below another)
    std::vector<SampleString> basis;
    for (const auto& c : b_cylinders) {
        if (c.size() > depth) throw Error("B cylinder deeper than the truncation depth");
        if (!jm.tree()->contains(c)) throw Error("B cylinder " + to_string(c) + " not in the tree");
        bool covered = false;
        for (const auto& other : b_cylinders)
            if (other.size() < c.size() && is_prefix(other, c)) covered = true;
        if (!covered) basis.push_back(c);
    }

    MartingaleTruncation mart;
    mart.depth = depth;
    mart.event = basis;

    Rational mass_b(0);
    for (const auto& c : basis) mass_b += jm.pushforward_sample(c);

    // walk the finite-branching tree; accumulate || max_{n<=depth} M_n ||^2
    Rational lhs_sq(0);
    struct Frame {
        SampleString node;
        Rational running_max;
    };
    auto mass_b_in = [&](const SampleString& node) {
        // mu_X(B intersect [node]) from the antichain
        Rational out(0);
        bool node_inside_b = false;
        for (const auto& c : basis) {
            if (is_prefix(c, node)) node_inside_b = true;
            if (is_prefix(node, c) && c.size() > node.size()) out += jm.pushforward_sample(c);
        }
        if (node_inside_b) return jm.pushforward_sample(node);
        return out;
    };

    std::vector<Frame> stack;
    Rational root_mass = jm.pushforward_sample({});
    Rational m0 = root_mass.is_zero() ? Rational(0) : mass_b / root_mass;
    mart.values[{}] = m0;
    mart.node_mass[{}] = root_mass;
    stack.push_back({{}, m0});
    size_t visited = 1;
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.node.size() == depth) {
            lhs_sq += jm.pushforward_sample(f.node) * f.running_max * f.running_max;
            continue;
        }
        auto kids = jm.tree()->children(f.node);
        if (!kids) throw Error("doob check needs finite branching");
        for (Symbol s : *kids) {
            SampleString child = f.node;
            child.push_back(s);
            if (++visited > (size_t{1} << 22)) throw ExplosionGuard("doob tree walk");
            Rational node_mass = jm.pushforward_sample(child);
            Rational m = node_mass.is_zero() ? Rational(0) : mass_b_in(child) / node_mass;
            mart.values[child] = m;
            mart.node_mass[child] = node_mass;
            stack.push_back({std::move(child), max(f.running_max, m)});
        }
    }

    bool holds = lhs_sq <= Rational(4) * mass_b;
    RealOracle lhs = RealOracle::sqrt(RealOracle::exact(lhs_sq));
    RealOracle rhs = RealOracle::exact(Rational(2)) * RealOracle::sqrt(RealOracle::exact(mass_b));
    return {lhs_sq, mass_b, holds, lhs, rhs, std::move(mart)};
}

}  // namespace effbayes

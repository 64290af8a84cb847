#include "effbayes/freedman.hpp"

#include <algorithm>
#include <set>

#include "effbayes/errors.hpp"

namespace effbayes {

Prior FreedmanPrior::to_prior() const {
    std::vector<Prior::Atom> atoms;
    atoms.push_back({positive_weight, ParameterPoint(positive_atom)});
    for (const auto& nu : nulls) atoms.push_back({nu.weight, ParameterPoint(nu.point)});
    return Prior::atomic(std::move(atoms));
}

FreedmanPrior build_freedman_prior(SimplexPoint positive,
                                   std::vector<std::pair<SimplexPoint, size_t>> nulls,
                                   std::vector<Rational> weights) {
    if (weights.size() != nulls.size() + 1) throw Error("need one weight per atom");
    if (!positive.all_positive()) throw NotInteriorPoint();
    Rational total(0);
    for (const auto& w : weights) {
        if (w.sign() <= 0) throw Error("weights must be positive");
        total += w;
    }
    if (total != Rational(1)) throw Error("weights sum to " + total.to_string() + ", not 1");

    FreedmanPrior fp;
    fp.positive_weight = weights[0];
    fp.positive_atom = std::move(positive);
    for (size_t j = 0; j < nulls.size(); ++j) {
        auto& [point, k] = nulls[j];
        if (!point.coordinate(k).is_zero())
            throw BadZeroCoordinate("coordinate " + std::to_string(k) + " of " + point.to_string());
        fp.nulls.push_back({std::move(point), k, weights[j + 1]});
    }
    return fp;
}

namespace {

std::optional<size_t> hitting_time_of(const FreedmanPrior& fp, const SampleString& x) {
    std::set<size_t> want;
    for (const auto& nu : fp.nulls) want.insert(nu.zero_coordinate);
    if (want.empty()) return 0;
    std::set<size_t> seen;
    for (size_t n = 0; n < x.size(); ++n) {
        if (want.count(x[n])) seen.insert(x[n]);
        if (seen.size() == want.size()) return n + 1;
    }
    return std::nullopt;
}

}  // namespace

CollapseResult collapse_trajectory(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                   size_t horizon, std::uint64_t seed) {
    if (!true_theta.all_positive()) throw Error("the true parameter must have every coordinate positive");
    JointMeasure jm(prior.to_prior(), Likelihood::iid_simplex());
    Rng rng(seed);
    SampleString x = jm.sample_path(ParameterPoint(true_theta), horizon, rng);

    CollapseResult out;
    out.hitting_time = hitting_time_of(prior, x);
    out.trajectory =
        posterior_trajectory(jm, ParameterEvent::points({ParameterPoint(prior.positive_atom)}), x, horizon);
    out.path = std::move(x);
    return out;
}

Rational miss_probability(const SimplexPoint& true_theta, const std::vector<size_t>& zero_coords, size_t n) {
    std::set<size_t> coords(zero_coords.begin(), zero_coords.end());
    std::vector<size_t> k(coords.begin(), coords.end());
    Rational out(0);
    // inclusion-exclusion over nonempty subsets of the designated coordinates
    for (size_t mask = 1; mask < (size_t{1} << k.size()); ++mask) {
        Rational mass(0);
        int bits = 0;
        for (size_t j = 0; j < k.size(); ++j) {
            if ((mask >> j) & 1) {
                mass += true_theta.coordinate(k[j]);
                ++bits;
            }
        }
        Rational term = (Rational(1) - mass).pow(static_cast<unsigned long>(n));
        out += (bits % 2 == 1) ? term : -term;
    }
    return out;
}

InconsistencyCertificate inconsistency_certificate(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                                   const SeparatingEvent& v, size_t horizon) {
    if (true_theta == prior.positive_atom)
        throw Error("the truth coincides with the collapse target; nothing to separate");

    std::string vdesc;
    if (v.ball_radius) {
        // certify that the d0-ball around the truth excludes the positive atom
        GapOrder g = compare_with_gap(d0_distance(true_theta, prior.positive_atom),
                                      RealOracle::exact(*v.ball_radius), v.gap);
        if (g != GapOrder::Greater)
            throw SeparationFailure("d0(truth, positive atom) vs radius " + v.ball_radius->to_string());
        vdesc = "ball(d0, center=truth, radius=" + v.ball_radius->to_string() + ")";
    } else {
        vdesc = "atom-complement of the positive atom";
    }

    std::vector<size_t> coords;
    for (const auto& nu : prior.nulls) coords.push_back(nu.zero_coordinate);
    Rational bound = prior.nulls.empty() ? Rational(0) : miss_probability(true_theta, coords, horizon);
    if (horizon == 0) bound = Rational(1);  // vacuous

    InconsistencyCertificate cert;
    cert.prior = prior;
    cert.true_theta = true_theta;
    cert.v_description = std::move(vdesc);
    cert.horizon = horizon;
    cert.bound = bound;
    cert.strictly_below_1 = bound < Rational(1);
    return cert;
}

DoubleIntegralResult double_integral_estimate(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                              const DoubleIntegrand& f, size_t n, unsigned replicas,
                                              std::uint64_t seed) {
    if (!f.event && !f.bump) throw Error("integrand must be an event or a bump");
    if (replicas == 0) throw Error("need replicas >= 1");
    Prior p = prior.to_prior();
    JointMeasure jm(p, Likelihood::iid_simplex());

    // integrand values at the atoms (exact rationals or enclosures)
    std::vector<Enclosure> f_at_atom;
    for (const auto& atom : p.atoms()) {
        if (f.event) {
            Tri t = f.event->membership(atom.point);
            if (t == Tri::Undecided) throw UndecidableEvent("integrand event at " + point_to_string(atom.point));
            f_at_atom.push_back(Enclosure::exact(t == Tri::In ? Rational(1) : Rational(0)));
        } else {
            const auto& sp = std::get<SimplexPoint>(atom.point);
            f_at_atom.push_back(bump(f.bump->center, f.bump->eps_k, f.bump->eps_k1, sp).evaluate(24));
        }
    }

    Rational sum_lo(0), sum_hi(0);
    for (unsigned r = 0; r < replicas; ++r) {
        Rng rng(Rng::derive_key(seed, "double-integral", r));
        SampleString x = jm.sample_path(ParameterPoint(true_theta), n, rng);
        Rational inner_lo(0), inner_hi(0);
        for (size_t a = 0; a < p.atoms().size(); ++a) {
            PosteriorValue post = posterior_eval(jm, ParameterEvent::points({p.atoms()[a].point}), x);
            inner_lo += post.value * f_at_atom[a].lo;
            inner_hi += post.value * f_at_atom[a].hi;
        }
        sum_lo += inner_lo;
        sum_hi += inner_hi;
    }
    Rational reps(static_cast<long>(replicas));

    DoubleIntegralResult out;
    out.replicas = replicas;
    out.mean_lo = sum_lo / reps;
    out.mean_hi = sum_hi / reps;

    // conservative 99% band for a [0,1]-bounded integrand:
    // halfwidth = sqrt(ln(200)/(2R)) with ln(200) <= 53/10
    Rational hw_sq = Rational(53, 10) / (Rational(2) * reps);
    Rational hw = sqrt_enclosure(Enclosure::exact(hw_sq), 20).hi;
    out.ci_lo = max(Rational(0), out.mean_lo - hw);
    out.ci_hi = min(Rational(1), out.mean_hi + hw);

    // attach exact hitting-time bounds when the integrand is decided at the atom
    std::vector<size_t> coords;
    for (const auto& nu : prior.nulls) coords.push_back(nu.zero_coordinate);
    if (!coords.empty()) {
        Rational miss = miss_probability(true_theta, coords, n);
        bool one_at_positive = false, zero_at_positive = false;
        if (f.event) {
            Tri t = f.event->membership(ParameterPoint(prior.positive_atom));
            one_at_positive = (t == Tri::In);
            zero_at_positive = (t == Tri::Out);
        } else {
            Enclosure at_center = bump(f.bump->center, f.bump->eps_k, f.bump->eps_k1, prior.positive_atom).evaluate(24);
            one_at_positive = at_center.lo == Rational(1);
            zero_at_positive = at_center.hi == Rational(0);
        }
        if (one_at_positive) out.certified_lower = Rational(1) - miss;
        if (zero_at_positive) out.certified_upper = miss;
    }
    return out;
}

}  // namespace effbayes

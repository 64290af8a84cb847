#include "effbayes/randomness.hpp"

#include <algorithm>

#include "effbayes/errors.hpp"

namespace effbayes {

namespace {

const ParameterPoint& need_param(const TestPoint& pt) {
    if (!pt.param) throw Error("test point has no parameter component");
    return *pt.param;
}

// Two Cantor cylinders are disjoint unless one extends the other, so dropping
// extensions yields a disjoint basis of the union.
template <typename Str>
std::vector<Str> cylinder_antichain(std::vector<Str> cyls) {
    std::sort(cyls.begin(), cyls.end(), [](const Str& a, const Str& b) { return a.size() < b.size(); });
    std::vector<Str> out;
    for (const auto& c : cyls) {
        bool covered = false;
        for (const auto& kept : out)
            if (c.size() >= kept.size() && std::equal(kept.begin(), kept.end(), c.begin())) covered = true;
        if (!covered) out.push_back(c);
    }
    return out;
}

template <typename Str>
Rational uniform_cylinder_measure(const std::vector<Str>& antichain) {
    Rational out(0);
    for (const auto& c : antichain) out += Rational::pow2(-static_cast<long>(c.size()));
    return out;
}

bool is_whole_space(const BasicOpen& g) {
    if (g.sample_freq) return false;
    if (g.param_set && !g.param_set->covers(IntervalUnion::full())) return false;
    if (g.param_prefix && !g.param_prefix->empty()) return false;
    if (g.sample_cylinder && !g.sample_cylinder->empty()) return false;
    return true;
}

}  // namespace

bool BasicOpen::contains(const TestPoint& pt) const {
    if (param_set) {
        const auto* u = std::get_if<UnitPoint>(&need_param(pt));
        if (!u) throw Error("generator constrains a unit-interval parameter");
        if (!param_set->contains(u->value)) return false;
    }
    if (param_prefix) {
        const auto* c = std::get_if<CantorPoint>(&need_param(pt));
        if (!c) throw Error("generator constrains a Cantor parameter");
        for (size_t i = 0; i < param_prefix->size(); ++i)
            if (c->bit(i) != (*param_prefix)[i]) return false;
    }
    if (sample_cylinder) {
        if (!pt.path) throw Error("test point has no sample component");
        for (size_t i = 0; i < sample_cylinder->size(); ++i)
            if (pt.path(i) != (*sample_cylinder)[i]) return false;
    }
    if (sample_freq) {
        if (!pt.path) throw Error("test point has no sample component");
        size_t ones = 0;
        for (size_t i = 0; i < sample_freq->first; ++i) ones += (pt.path(i) == 1);
        if (ones != sample_freq->second) return false;
    }
    return true;
}

bool OpenSetDesc::contains_at_stage(const TestPoint& pt, size_t stage) const {
    size_t upto = std::min(stage, gens.size());
    for (size_t i = 0; i < upto; ++i)
        if (gens[i].contains(pt)) return true;
    return false;
}

bool OpenSetDesc::contains(const TestPoint& pt) const {
    for (const auto& g : gens)
        if (g.contains(pt)) return true;
    if (!complete) throw UndecidedMembership("open-set description truncated");
    return false;
}

bool SequentialSchnorrTest::dyadic_bounds_ok() const {
    for (size_t n = 0; n < levels.size(); ++n)
        if (levels[n].measure > Rational::pow2(-static_cast<long>(n))) return false;
    return true;
}

void SequentialSchnorrTest::require_full_decreasing() const {
    if (levels.empty()) throw Error("test has no levels");

    bool full = levels[0].measure == Rational(1);
    bool whole_gen = false;
    for (const auto& g : levels[0].gens) whole_gen = whole_gen || is_whole_space(g);
    if (!full || !whole_gen) throw Error("U_0 must be the whole space");

    for (size_t n = 0; n + 1 < levels.size(); ++n) {
        for (const auto& g : levels[n + 1].gens) {
            bool covered = false;
            for (const auto& big : levels[n].gens) {
                if (is_whole_space(big)) {
                    covered = true;
                } else if (big.param_prefix && g.param_prefix) {
                    if (g.param_prefix->size() >= big.param_prefix->size() &&
                        std::equal(big.param_prefix->begin(), big.param_prefix->end(), g.param_prefix->begin()))
                        covered = true;
                } else if (big.param_set && g.param_set && !big.param_prefix && !big.sample_cylinder &&
                           !big.sample_freq) {
                    if (big.param_set->covers(*g.param_set)) covered = true;
                } else if (big.sample_cylinder && g.sample_cylinder && !big.param_set && !big.param_prefix) {
                    if (g.sample_cylinder->size() >= big.sample_cylinder->size() &&
                        std::equal(big.sample_cylinder->begin(), big.sample_cylinder->end(),
                                   g.sample_cylinder->begin()))
                        covered = true;
                }
                if (covered) break;
            }
            if (!covered) throw Error("levels are not verifiably decreasing at level " + std::to_string(n + 1));
        }
    }
}

SequentialSchnorrTest all_zeros_cylinder_test(size_t levels, CylinderRole role) {
    SequentialSchnorrTest t;
    for (size_t n = 0; n < levels; ++n) {
        BasicOpen g;
        if (role == CylinderRole::CantorParameter) {
            g.param_prefix = std::vector<uint8_t>(n, 0);
        } else {
            g.sample_cylinder = SampleString(n, 0);
        }
        OpenSetDesc level;
        level.gens = {std::move(g)};
        level.measure = Rational::pow2(-static_cast<long>(n));
        t.levels.push_back(std::move(level));
    }
    return t;
}

StageResult test_membership_stage(const SequentialSchnorrTest& test, const TestPoint& pt, size_t stage) {
    if (test.levels.empty()) return {false, 0};
    size_t top = std::min(stage, test.levels.size() - 1);
    size_t best = 0;
    bool broke = false;
    for (size_t n = 0; n <= top; ++n) {
        if (!test.levels[n].contains_at_stage(pt, stage)) {
            broke = true;
            break;
        }
        best = n;
    }
    (void)broke;
    if (best == 0) return {false, 0};
    return {true, best};
}

SigmaTwoClass SigmaTwoClass::from_cylinder_pieces(std::vector<std::vector<SampleString>> pieces) {
    SigmaTwoClass b;
    b.base = BaseMeasure::CantorUniform;
    std::vector<SampleString> everything;
    for (auto& piece : pieces) {
        ClosedPiece p;
        auto basis = cylinder_antichain(piece);
        p.measure = uniform_cylinder_measure(basis);
        everything.insert(everything.end(), basis.begin(), basis.end());
        p.cylinders = std::move(basis);
        b.pieces.push_back(std::move(p));
    }
    b.total_measure = uniform_cylinder_measure(cylinder_antichain(everything));
    return b;
}

SigmaTwoClass SigmaTwoClass::from_interval_pieces(std::vector<IntervalUnion> pieces) {
    SigmaTwoClass b;
    b.base = BaseMeasure::LebesgueUnit;
    IntervalUnion all;
    for (auto& piece : pieces) {
        ClosedPiece p;
        p.measure = piece.measure();
        all = all.unite(piece);
        p.intervals = std::move(piece);
        b.pieces.push_back(std::move(p));
    }
    b.total_measure = all.measure();
    return b;
}

bool SigmaTwoClass::contains_path(const std::function<Symbol(size_t)>& path) const {
    for (const auto& p : pieces) {
        if (!p.cylinders) continue;
        for (const auto& c : *p.cylinders) {
            bool match = true;
            for (size_t i = 0; i < c.size() && match; ++i) match = (path(i) == c[i]);
            if (match) return true;
        }
    }
    return false;
}

bool SigmaTwoClass::contains_unit(const Rational& x) const {
    for (const auto& p : pieces)
        if (p.intervals && p.intervals->contains(x)) return true;
    return false;
}

CoverResult sigma2_cover(const SigmaTwoClass& b, const Rational& eps) {
    if (eps.sign() <= 0) throw Error("cover needs eps > 0");
    CoverResult out;
    if (b.base == BaseMeasure::CantorUniform) {
        // clopen pieces cover themselves; excess is exactly zero
        std::vector<SampleString> everything;
        for (const auto& p : b.pieces) {
            out.cylinder_cover.push_back(*p.cylinders);
            everything.insert(everything.end(), p.cylinders->begin(), p.cylinders->end());
        }
        out.measure = uniform_cylinder_measure(cylinder_antichain(everything));
        out.excess = Rational(0);
        if (out.measure != b.total_measure) throw InvariantViolation("clopen cover measure drifted");
        return out;
    }
    IntervalUnion cover;
    IntervalUnion body;
    for (size_t i = 0; i < b.pieces.size(); ++i) {
        const auto& piece = *b.pieces[i].intervals;
        body = body.unite(piece);
        Rational budget = eps * Rational::pow2(-static_cast<long>(i) - 1);
        size_t m = std::max<size_t>(piece.parts().size(), 1);
        Rational w = budget / Rational(static_cast<long>(2 * m));
        std::vector<RatInterval> widened;
        for (const auto& part : piece.parts()) {
            RatInterval r;
            r.lo = part.lo - w;
            r.lo_closed = false;
            if (r.lo < Rational(0)) {
                r.lo = Rational(0);
                r.lo_closed = true;
            }
            r.hi = part.hi + w;
            r.hi_closed = false;
            if (r.hi > Rational(1)) {
                r.hi = Rational(1);
                r.hi_closed = true;
            }
            widened.push_back(r);
        }
        cover = cover.unite(IntervalUnion(std::move(widened)));
    }
    if (!cover.covers(body)) throw InvariantViolation("cover does not contain the class");
    out.interval_cover = cover;
    out.measure = cover.measure();
    out.excess = cover.measure() - body.measure();
    if (!(out.excess < eps)) throw InvariantViolation("cover excess not below eps");
    return out;
}

Rational lrf_level_measure(const Prior& prior, unsigned n, const Rational& eta) {
    if (n == 0) throw Error("levels start at n = 1");
    unsigned m = n * n;
    if (prior.is_atomic()) {
        Rational out(0);
        for (const auto& atom : prior.atoms()) {
            const auto* u = std::get_if<UnitPoint>(&atom.point);
            if (!u) throw SpaceMismatch("lrf test needs a prior on [0,1]");
            out += atom.weight * bernoulli_deviation_prob(u->value, m, eta);
        }
        return out;
    }
    // density prior: count classes against exact polynomial integrals
    if (static_cast<unsigned long long>(m) > (1ULL << 14)) throw ExplosionGuard("lrf level enumeration");
    Rational out(0);
    for (unsigned i = 0; i <= m; ++i) {
        Rational center(static_cast<long>(i), static_cast<long>(m));
        IntervalUnion away({RatInterval{Rational(0), center - eta, true, false},
                            RatInterval{center + eta, Rational(1), false, true}});
        if (away.empty()) continue;
        Polynomial f = prior.density() * Polynomial::bernstein_power(i, m);
        Rational coef(binomial(m, i), mpz_class(1));
        for (const auto& part : away.parts()) out += coef * f.integrate(part.lo, part.hi);
    }
    return out;
}

namespace {

// rationals q1 < q2 strictly inside ((n+1)^-1/3, n^-1/3)
std::pair<Rational, Rational> eta_window(unsigned n) {
    for (unsigned bits = 8;; bits *= 2) {
        Enclosure lo = nth_root_enclosure(Rational(1, static_cast<long>(n) + 1), 3, bits);
        Enclosure hi = nth_root_enclosure(Rational(1, static_cast<long>(n)), 3, bits);
        if (lo.hi < hi.lo) return {lo.hi, hi.lo};
        if (bits > 4096) throw Error("could not separate the eta window");
    }
}

}  // namespace

LrfSchnorrResult lrf_schnorr_test(const Prior& prior, unsigned horizon) {
    LrfSchnorrResult out;
    out.moment_pair = prior.moments();
    Rational spread = out.moment_pair.alpha - out.moment_pair.beta;

    OpenSetDesc everything;
    everything.gens = {BasicOpen{}};
    everything.measure = Rational(1);
    out.test.levels.push_back(std::move(everything));

    for (unsigned n = 1; n <= horizon; ++n) {
        unsigned m = n * n;
        auto [wlo, whi] = eta_window(n);

        // atoms of the pushforward of |f_{n^2} - Theta| inside the window
        std::vector<Rational> jumps;
        if (prior.is_atomic()) {
            for (const auto& atom : prior.atoms()) {
                const auto& theta = std::get<UnitPoint>(atom.point).value;
                for (unsigned i = 0; i <= m; ++i) {
                    Rational v = abs(Rational(static_cast<long>(i), static_cast<long>(m)) - theta);
                    if (wlo < v && v < whi) jumps.push_back(v);
                }
            }
        }
        Rational eta = avoid_atoms(wlo, whi, jumps);
        Rational measure = lrf_level_measure(prior, n, eta);

        // exact decision of measure <= cbrt(4) n^-4/3 (alpha - beta) via cubes
        Rational lhs_cubed = measure.pow(3) * Rational(static_cast<long>(n)).pow(4);
        Rational rhs_cubed = Rational(4) * spread.pow(3);
        bool holds = lhs_cubed <= rhs_cubed;
        Enclosure bound =
            spread.is_zero()
                ? Enclosure::exact(Rational(0))
                : nth_root_enclosure(Rational(4) * spread.pow(3) / Rational(static_cast<long>(n)).pow(4), 3, 30);

        OpenSetDesc level;
        for (unsigned i = 0; i <= m; ++i) {
            Rational center(static_cast<long>(i), static_cast<long>(m));
            IntervalUnion away({RatInterval{Rational(0), center - eta, true, false},
                                RatInterval{center + eta, Rational(1), false, true}});
            if (away.empty()) continue;
            BasicOpen g;
            g.param_set = away;
            g.sample_freq = std::make_pair(static_cast<size_t>(m), static_cast<size_t>(i));
            level.gens.push_back(std::move(g));
        }
        level.measure = measure;
        out.test.levels.push_back(std::move(level));
        out.rows.push_back({n, eta, measure, holds, bound});
    }
    return out;
}

namespace {

struct ReversalCore {
    SequentialSchnorrTest test;
    unsigned budget;

    std::optional<size_t> level_of(const ParameterPoint& theta) const {
        TestPoint pt = TestPoint::parameter(theta);
        size_t top = std::min<size_t>(budget, test.levels.size() - 1);
        for (size_t next = 1; next <= top; ++next) {
            if (!test.levels[next].contains(pt)) return next - 1;
        }
        return std::nullopt;  // inside every level through the budget: captured
    }
};

}  // namespace

std::optional<size_t> ExtendedModel::level_of(const ParameterPoint& theta) const {
    return ReversalCore{test, stage_budget}.level_of(theta);
}

ExtendedModel reversal_build(const Likelihood& base, SequentialSchnorrTest test, unsigned stage_budget) {
    if (stage_budget == 0) throw Error("stage budget must be >= 1");
    test.require_full_decreasing();

    auto core = std::make_shared<const ReversalCore>(ReversalCore{test, stage_budget});

    ExtendedModel model;
    model.test = std::move(test);
    model.stage_budget = stage_budget;
    model.tree = SampleTree::extended(base.tree());

    Likelihood::Backend backend;
    backend.param_space = base.param_space();
    backend.tree = model.tree;
    Likelihood base_copy = base;
    backend.eval = [core, base_copy](const ParameterPoint& theta, const SampleString& tau) {
        std::optional<size_t> lvl = core->level_of(theta);
        if (tau.empty()) return lvl ? Rational(1) : Rational(0);
        if (!lvl || tau[0] != *lvl) return Rational(0);
        SampleString sigma(tau.begin() + 1, tau.end());
        return base_copy.eval(theta, sigma);
    };
    backend.sample_step = [core, base_copy](const ParameterPoint& theta, const SampleString& prefix,
                                            const Rational& u) -> Symbol {
        if (prefix.empty()) {
            std::optional<size_t> lvl = core->level_of(theta);
            if (!lvl) throw ZeroMassParameter();
            return static_cast<Symbol>(*lvl);
        }
        SampleString rest(prefix.begin() + 1, prefix.end());
        return base_copy.sample_step(theta, rest, u);
    };
    Likelihood gated = Likelihood::custom(std::move(backend));
    gated = gated.with_support([core](const ParameterPoint& theta) { return core->level_of(theta).has_value(); });
    if (base.support()) gated = gated.with_support(base.support());
    model.likelihood = std::move(gated);
    return model;
}

}  // namespace effbayes

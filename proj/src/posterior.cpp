#include "effbayes/posterior.hpp"

#include <set>

#include "effbayes/errors.hpp"

namespace effbayes {

PosteriorValue posterior_eval(const JointMeasure& jm, const ParameterEvent& A, const SampleString& sigma) {
    Rational den = jm.rectangle(ParameterEvent::full(), sigma);
    if (den.is_zero()) return PosteriorValue{Rational(0), true};
    Rational num = jm.rectangle(A, sigma);
    return PosteriorValue{num / den, false};
}

PosteriorTrajectory posterior_trajectory(const JointMeasure& jm, const ParameterEvent& A,
                                         const SampleString& x, size_t N) {
    if (N > x.size()) throw Error("trajectory horizon exceeds the provided prefix");
    PosteriorTrajectory out;
    out.event = A;
    out.sample = SampleString(x.begin(), x.begin() + static_cast<long>(N));
    for (size_t n = 0; n <= N; ++n) {
        SampleString prefix(x.begin(), x.begin() + static_cast<long>(n));
        if (!jm.tree()->contains(prefix)) throw Error("prefix " + to_string(prefix) + " leaves the tree");
        PosteriorValue v = posterior_eval(jm, A, prefix);
        if (v.degenerate && !out.degenerate_onset) out.degenerate_onset = n;
        out.values.push_back(std::move(v));
    }
    return out;
}

namespace {

constexpr size_t kStringBudget = size_t{1} << 20;

// Symbols that can carry mass at any step, for Baire-space atomic models.
std::vector<Symbol> finite_symbol_support(const Prior& prior) {
    std::set<Symbol> symbols;
    for (const auto& atom : prior.atoms()) {
        const auto* sp = std::get_if<SimplexPoint>(&atom.point);
        if (!sp) throw TooManyStrings("Baire-space enumeration needs simplex atoms");
        if (sp->has_geometric_tail())
            throw TooManyStrings("atom " + sp->to_string() + " has infinite support");
        for (size_t i = 0; i < sp->head_size(); ++i)
            if (sp->coordinate(i).sign() > 0) symbols.insert(static_cast<Symbol>(i));
    }
    return {symbols.begin(), symbols.end()};
}

}  // namespace

std::vector<SampleString> reachable_strings(const JointMeasure& jm, size_t depth) {
    std::vector<SampleString> layer{{}};
    for (size_t d = 0; d < depth; ++d) {
        std::vector<SampleString> next;
        for (const auto& node : layer) {
            std::vector<Symbol> symbols;
            auto kids = jm.tree()->children(node);
            if (kids.has_value()) {
                symbols = *kids;
            } else {
                if (!jm.prior().is_atomic())
                    throw TooManyStrings("infinite branching under a density prior");
                symbols = finite_symbol_support(jm.prior());
            }
            for (Symbol s : symbols) {
                SampleString child = node;
                child.push_back(s);
                next.push_back(std::move(child));
            }
            if (next.size() > kStringBudget) throw TooManyStrings("depth " + std::to_string(depth));
        }
        layer = std::move(next);
    }
    return layer;
}

CondExpReport verify_conditional_expectation(const JointMeasure& jm, const ParameterEvent& A, size_t depth) {
    std::vector<SampleString> strings = reachable_strings(jm, depth);
    CondExpReport report;
    report.depth = depth;
    report.reachable = strings.size();
    report.max_discrepancy = Rational(0);

    // per-string pieces; subsets then add these up
    std::vector<Rational> lhs_piece, rhs_piece;
    lhs_piece.reserve(strings.size());
    rhs_piece.reserve(strings.size());
    for (const auto& sigma : strings) {
        lhs_piece.push_back(jm.rectangle(A, sigma));
        PosteriorValue p = posterior_eval(jm, A, sigma);
        rhs_piece.push_back(p.value * jm.pushforward_sample(sigma));
    }

    auto check_subset = [&](const std::vector<size_t>& idx) {
        Rational lhs(0), rhs(0);
        for (size_t i : idx) {
            lhs += lhs_piece[i];
            rhs += rhs_piece[i];
        }
        Rational d = abs(lhs - rhs);
        if (d > report.max_discrepancy) report.max_discrepancy = d;
        ++report.subsets_checked;
    };

    if (strings.size() <= 12) {
        report.exhaustive = true;
        for (size_t mask = 0; mask < (size_t{1} << strings.size()); ++mask) {
            std::vector<size_t> idx;
            for (size_t i = 0; i < strings.size(); ++i)
                if ((mask >> i) & 1) idx.push_back(i);
            check_subset(idx);
        }
    } else {
        report.exhaustive = false;
        std::vector<size_t> all(strings.size());
        for (size_t i = 0; i < strings.size(); ++i) all[i] = i;
        check_subset(all);
        for (size_t i = 0; i < strings.size(); ++i) {
            check_subset({i});
            std::vector<size_t> rest;
            for (size_t j = 0; j < strings.size(); ++j)
                if (j != i) rest.push_back(j);
            check_subset(rest);
        }
    }
    return report;
}

LscCheckReport posterior_lsc_check(const JointMeasure& jm, const std::vector<ParameterEvent>& stages,
                                   const std::optional<ParameterEvent>& limit, const SampleString& sigma,
                                   const Rational& tol) {
    LscCheckReport report;
    report.nondecreasing = true;
    for (const auto& U : stages) {
        PosteriorValue v = posterior_eval(jm, U, sigma);
        if (!report.stages.empty() && v.value < report.stages.back().value) report.nondecreasing = false;
        report.stages.push_back({v.value, v.degenerate});
    }
    if (limit) {
        PosteriorValue v = posterior_eval(jm, *limit, sigma);
        report.limit_value = v.value;
        if (!report.stages.empty())
            report.converged = abs(v.value - report.stages.back().value) <= tol;
    }
    return report;
}

}  // namespace effbayes

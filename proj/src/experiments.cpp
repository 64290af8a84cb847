#include "effbayes/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>

#include "effbayes/csv.hpp"
#include "effbayes/errors.hpp"
#include "effbayes/estimators.hpp"

namespace effbayes {

namespace {

constexpr const char* kVersion = "effbayes 0.1.0";

std::vector<size_t> checkpoints(size_t horizon) {
    std::vector<size_t> out;
    for (size_t n = 0; n <= std::min<size_t>(horizon, 10); ++n) out.push_back(n);
    for (size_t n : {20u, 50u, 100u, 200u, 500u, 1000u, 2000u, 5000u, 10000u}) {
        if (n < horizon) out.push_back(n);
    }
    if (horizon > 10) out.push_back(horizon);
    return out;
}

std::string frac(const Rational& r) { return r.to_string(); }

// deterministic sort keys for report rows
bool row_less(const ReportRow& a, const ReportRow& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params < b.params;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!j.contains("experiment")) throw ConfigError("config needs an \"experiment\" key");
    ExperimentConfig c;
    c.experiment = j.at("experiment").get<std::string>();
    c.payload = j;
    if (j.contains("horizon")) {
        long long h = j.at("horizon").get<long long>();
        if (h < 1) throw ConfigError("horizon must be >= 1");
        c.horizon = static_cast<size_t>(h);
    }
    if (j.contains("replicas")) {
        long long r = j.at("replicas").get<long long>();
        if (r < 1) throw ConfigError("replicas must be >= 1");
        c.replicas = static_cast<unsigned>(r);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("precision")) {
        long long p = j.at("precision").get<long long>();
        if (p < 4) throw ConfigError("precision must be >= 4");
        c.precision = static_cast<unsigned>(p);
    }
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("inject_fault")) c.inject_fault = j.at("inject_fault").get<bool>();
    return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot read " + p.string());
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("bad JSON in " + p.string() + ": " + e.what());
    }
    return from_json(j);
}

bool RunReport::all_hold() const {
    for (const auto& r : rows)
        if (!r.holds) return false;
    return true;
}

void RunReport::write(const std::filesystem::path& dir, const std::string& name) const {
    std::filesystem::create_directories(dir);

    std::vector<ReportRow> sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(), row_less);
    std::vector<std::vector<std::string>> rrows;
    for (const auto& r : sorted) {
        rrows.push_back({r.name, r.params, r.lhs, r.rhs, r.decimal, r.width, r.exact ? "1" : "0",
                         r.holds ? "1" : "0"});
    }
    write_csv(dir / (name + "_report.csv"),
              {"check_name", "params", "lhs", "rhs", "decimal", "width", "exact", "holds"}, rrows);

    if (!trajectories.empty()) {
        std::vector<TrajectoryRow> traj = trajectories;
        std::stable_sort(traj.begin(), traj.end(), [](const TrajectoryRow& a, const TrajectoryRow& b) {
            if (a.event_id != b.event_id) return a.event_id < b.event_id;
            return a.n < b.n;
        });
        std::vector<std::vector<std::string>> trows;
        for (const auto& t : traj) {
            trows.push_back({std::to_string(t.n), t.event_id, t.value.numerator().get_str(),
                             t.value.denominator().get_str(), render_decimal(t.value),
                             t.degenerate ? "1" : "0"});
        }
        write_csv(dir / (name + "_trajectories.csv"),
                  {"n", "event_id", "value_num", "value_den", "value_decimal", "degenerate_flag"}, trows);
    }

    std::ofstream meta(dir / (name + ".meta.json"));
    meta << metadata.dump(2) << "\n";
}

namespace {

ReportRow exact_row(std::string name, std::string params, const Rational& lhs, const Rational& rhs,
                    bool holds) {
    ReportRow r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = frac(lhs);
    r.rhs = frac(rhs);
    r.decimal = render_decimal(lhs);
    r.width = "0";
    r.exact = true;
    r.holds = holds;
    return r;
}

ReportRow flag_row(std::string name, std::string params, bool holds) {
    ReportRow r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = holds ? "pass" : "fail";
    r.rhs = "pass";
    r.decimal = holds ? "1" : "0";
    r.width = "0";
    r.holds = holds;
    return r;
}

}  // namespace

RunReport run_doob(const ExperimentConfig& config) {
    reject_unknown_keys(config.payload,
                        {"experiment", "model", "thetas", "event", "tolerance", "horizon", "replicas",
                         "seed", "precision", "out", "inject_fault"},
                        "doob config");
    auto t0 = std::chrono::steady_clock::now();

    ModelDescription model =
        config.payload.contains("model") ? model_from_json(config.payload.at("model")) : builtin_models()[0];
    JointMeasure jm = model.joint();

    std::vector<Rational> thetas;
    if (config.payload.contains("thetas")) {
        for (const auto& t : config.payload.at("thetas")) thetas.push_back(rational_from_json(t));
    } else {
        thetas = {Rational(1, 3), Rational(2, 3), Rational(9, 10)};
    }
    RatInterval window{Rational(1, 2), Rational(1), false, true};
    if (config.payload.contains("event")) {
        const Json& e = config.payload.at("event");
        reject_unknown_keys(e, {"lo", "hi", "lo_closed", "hi_closed"}, "doob event");
        window.lo = rational_from_json(e.at("lo"));
        window.hi = rational_from_json(e.at("hi"));
        window.lo_closed = e.value("lo_closed", false);
        window.hi_closed = e.value("hi_closed", true);
    }
    ParameterEvent event = ParameterEvent::interval(window);
    Rational tol = config.payload.contains("tolerance") ? rational_from_json(config.payload.at("tolerance"))
                                                        : Rational(1, 20);

    RunReport report;
    size_t horizon = config.horizon;
    std::vector<size_t> marks = checkpoints(horizon);

    // posterior values depend on the sample only through its count of ones
    std::map<std::pair<size_t, size_t>, PosteriorValue> cache;
    auto posterior_at = [&](const SampleString& x, size_t n) {
        size_t ones = 0;
        for (size_t i = 0; i < n; ++i) ones += (x[i] == 1);
        auto key = std::make_pair(ones, n);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        SampleString canonical(n - ones, 0);
        canonical.insert(canonical.end(), ones, 1);
        PosteriorValue v = posterior_eval(jm, event, canonical);
        cache.emplace(key, v);
        return v;
    };

    for (const Rational& theta : thetas) {
        Tri member = event.membership(UnitPoint{theta});
        if (member == Tri::Undecided) throw UndecidableEvent("event at theta = " + theta.to_string());
        Rational target = member == Tri::In ? Rational(1) : Rational(0);

        unsigned converged = 0;
        for (unsigned rep = 0; rep < config.replicas; ++rep) {
            Rng rng(Rng::derive_key(config.seed, "doob:" + theta.to_string(), rep));
            SampleString x = jm.sample_path(UnitPoint{theta}, horizon, rng);
            for (size_t n : marks) {
                PosteriorValue v = posterior_at(x, n);
                report.trajectories.push_back(
                    {n, "theta=" + theta.to_string() + ";rep=" + std::to_string(rep), v.value, v.degenerate});
            }
            PosteriorValue last = posterior_at(x, horizon);
            if (!last.degenerate && abs(last.value - target) < tol) ++converged;
        }
        Rational share(static_cast<long>(converged), static_cast<long>(config.replicas));
        report.rows.push_back(exact_row(
            "doob-consistency",
            "theta=" + theta.to_string() + ";N=" + std::to_string(horizon) + ";replicas=" +
                std::to_string(config.replicas) + ";tol=" + tol.to_string(),
            share, Rational(19, 20), share >= Rational(19, 20)));
    }

    auto t1 = std::chrono::steady_clock::now();
    report.metadata = {{"experiment", "doob"},
                       {"seed", config.seed},
                       {"version", kVersion},
                       {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
    return report;
}

RunReport run_freedman(const ExperimentConfig& config) {
    reject_unknown_keys(config.payload,
                        {"experiment", "model", "true_theta", "cdf_checkpoints", "certificate_horizon",
                         "horizon", "replicas", "seed", "precision", "out", "inject_fault"},
                        "freedman config");
    auto t0 = std::chrono::steady_clock::now();

    FreedmanPrior fp;
    if (config.payload.contains("model")) {
        fp = freedman_prior_from_json(config.payload.at("model"));
    } else {
        fp = build_freedman_prior(
            SimplexPoint::geometric(Rational(1, 2), Rational(1, 2)),
            {{SimplexPoint::finite({Rational(1, 2), Rational(1, 2), Rational(0)}), 2}},
            {Rational(1, 2), Rational(1, 2)});
    }
    SimplexPoint true_theta = SimplexPoint::geometric(Rational(2, 3), Rational(1, 3));
    if (config.payload.contains("true_theta"))
        true_theta = std::get<SimplexPoint>(point_from_json(config.payload.at("true_theta")));

    std::vector<size_t> cdf_marks{5, 13, 27, 60};
    if (config.payload.contains("cdf_checkpoints")) {
        cdf_marks.clear();
        for (const auto& m : config.payload.at("cdf_checkpoints")) cdf_marks.push_back(m.get<size_t>());
    }
    size_t cert_horizon = config.payload.value("certificate_horizon", 27);

    Prior prior = fp.to_prior();
    JointMeasure jm(prior, Likelihood::iid_simplex());
    std::vector<size_t> zero_coords;
    for (const auto& nu : fp.nulls) zero_coords.push_back(nu.zero_coordinate);

    RunReport report;
    size_t horizon = config.horizon;
    unsigned runs = config.replicas;

    // atom coordinates are exact rationals; posteriors via incremental products
    const auto& atoms = prior.atoms();
    size_t exact_failures = 0;
    size_t not_hit = 0;
    std::vector<size_t> hits;
    hits.reserve(runs);

    for (unsigned rep = 0; rep < runs; ++rep) {
        Rng rng(Rng::derive_key(config.seed, "freedman", rep));
        SampleString x = jm.sample_path(ParameterPoint(true_theta), horizon, rng);

        // designated-coordinate hitting time
        std::set<size_t> want(zero_coords.begin(), zero_coords.end());
        std::set<size_t> seen;
        std::optional<size_t> hit;
        for (size_t n = 0; n < x.size() && !hit; ++n) {
            if (want.count(x[n])) seen.insert(x[n]);
            if (seen.size() == want.size()) hit = n + 1;
        }

        // incremental posterior of the positive atom along the path
        std::vector<Rational> like(atoms.size(), Rational(1));
        bool ok = true;
        for (size_t n = 1; n <= x.size(); ++n) {
            for (size_t a = 0; a < atoms.size(); ++a)
                like[a] *= std::get<SimplexPoint>(atoms[a].point).coordinate(x[n - 1]);
            if (hit && n >= *hit) {
                Rational den(0);
                for (size_t a = 0; a < atoms.size(); ++a) den += atoms[a].weight * like[a];
                Rational num = atoms[0].weight * like[0];
                if (den.is_zero() || num != den) ok = false;
            }
        }
        if (!ok) ++exact_failures;
        if (hit)
            hits.push_back(*hit);
        else
            ++not_hit;

        if (rep == 0) {
            PosteriorTrajectory traj = posterior_trajectory(
                jm, ParameterEvent::points({ParameterPoint(fp.positive_atom)}), x, std::min<size_t>(horizon, 60));
            for (size_t n = 0; n < traj.values.size(); ++n)
                report.trajectories.push_back({n, "positive-atom;rep=0", traj.values[n].value,
                                               traj.values[n].degenerate});
        }
    }

    report.rows.push_back(flag_row("freedman-exact-after-hit",
                                   "runs=" + std::to_string(runs) + ";horizon=" + std::to_string(horizon),
                                   exact_failures == 0));

    for (size_t n : cdf_marks) {
        if (n > horizon) continue;
        Rational p = Rational(1) - miss_probability(true_theta, zero_coords, n);
        long count = 0;
        for (size_t h : hits) count += (h <= n);
        Rational share(count, static_cast<long>(runs));
        Rational var = p * (Rational(1) - p) / Rational(static_cast<long>(runs));
        Rational band = Rational(3) * sqrt_enclosure(Enclosure::exact(var), 20).hi;
        bool holds = abs(share - p) <= band;
        ReportRow row = exact_row("freedman-hitting-cdf", "n=" + std::to_string(n), share, p, holds);
        row.width = render_decimal(band);
        report.rows.push_back(row);
    }

    if (true_theta == fp.positive_atom) {
        report.rows.push_back(flag_row("freedman-consistent-at-truth", "", true));
    } else {
        InconsistencyCertificate cert = inconsistency_certificate(fp, true_theta, SeparatingEvent{}, cert_horizon);
        report.rows.push_back(exact_row("freedman-certificate",
                                        "horizon=" + std::to_string(cert_horizon) + ";V=atom-complement",
                                        cert.bound, Rational(1), cert.strictly_below_1));
        std::filesystem::create_directories(config.out_dir);
        std::ofstream out(config.out_dir / "freedman_certificate.json");
        out << certificate_to_json(cert).dump(2) << "\n";
    }

    auto t1 = std::chrono::steady_clock::now();
    report.metadata = {{"experiment", "freedman"},
                       {"seed", config.seed},
                       {"version", kVersion},
                       {"runs_without_hit", not_hit},
                       {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
    return report;
}

RunReport run_reversal(const ExperimentConfig& config) {
    reject_unknown_keys(config.payload,
                        {"experiment", "rate0", "rate1", "test_levels", "stage_budget", "horizon",
                         "replicas", "seed", "precision", "out", "inject_fault"},
                        "reversal config");
    auto t0 = std::chrono::steady_clock::now();

    Rational rate0 = config.payload.contains("rate0") ? rational_from_json(config.payload.at("rate0"))
                                                      : Rational(1, 3);
    Rational rate1 = config.payload.contains("rate1") ? rational_from_json(config.payload.at("rate1"))
                                                      : Rational(2, 3);
    size_t levels = config.payload.value("test_levels", 7);
    unsigned budget = config.payload.value("stage_budget", 6u);
    size_t horizon = std::max<size_t>(config.horizon, 4);

    Likelihood base = Likelihood::cantor_bitwise(rate0, rate1);
    ExtendedModel model =
        reversal_build(base, all_zeros_cylinder_test(levels, CylinderRole::CantorParameter), budget);

    RunReport report;
    ParameterPoint captured = CantorPoint::all_zeros();
    ParameterPoint escape0 = CantorPoint::eventually_constant({1}, 0);
    ParameterPoint escape2 = CantorPoint::eventually_constant({0, 0, 1}, 0);

    // captured point: all-zero likelihoods and degenerate posteriors
    report.rows.push_back(exact_row("reversal-captured-root", "point=zeros",
                                    model.likelihood.eval(captured, {}), Rational(0),
                                    model.likelihood.eval(captured, {}) == Rational(0)));
    {
        Prior point_prior = Prior::atomic({{Rational(1), captured}});
        JointMeasure jm(point_prior, model.likelihood);
        SampleString zeros(horizon, 0);
        PosteriorTrajectory traj = posterior_trajectory(jm, ParameterEvent::full(), zeros, horizon);
        bool degenerate_from_1 = true;
        for (size_t n = 1; n < traj.values.size(); ++n) degenerate_from_1 = degenerate_from_1 && traj.values[n].degenerate;
        report.rows.push_back(flag_row("reversal-captured-degenerate", "from_depth=1", degenerate_from_1));
        for (size_t n = 0; n < traj.values.size(); ++n)
            report.trajectories.push_back({n, "captured;event=full", traj.values[n].value, traj.values[n].degenerate});
    }

    // escaping points: root mass one, level routing, mass conservation
    report.rows.push_back(exact_row("reversal-escaping-root", "point=(1...)",
                                    model.likelihood.eval(escape0, {}), Rational(1),
                                    model.likelihood.eval(escape0, {}) == Rational(1)));
    report.rows.push_back(flag_row("reversal-level", "point=(1...);expect=0", model.level_of(escape0) == size_t{0}));
    report.rows.push_back(flag_row("reversal-level", "point=(001...);expect=2", model.level_of(escape2) == size_t{2}));

    const std::vector<std::tuple<std::string, ParameterPoint, Rational>> mass_cases{
        {"escape0", escape0, Rational(1)}, {"captured", captured, Rational(0)}};
    for (const auto& [tag, pt, expect] : mass_cases) {
        Rational total(0);
        for (Symbol m = 0; m < static_cast<Symbol>(levels + 1); ++m) total += model.likelihood.eval(pt, {m});
        report.rows.push_back(
            exact_row("reversal-copy-mass", "point=" + tag, total, expect, total == expect));
    }

    // copy-0 trajectories equal the base model's, event by event
    {
        ParameterPoint a = CantorPoint::eventually_constant({1, 0}, 0);
        ParameterPoint b = CantorPoint::eventually_constant({1, 1}, 0);
        Prior prior = Prior::atomic({{Rational(1, 3), a}, {Rational(2, 3), b}});
        JointMeasure base_jm(prior, base);
        JointMeasure ext_jm(prior, model.likelihood);
        Rng rng(Rng::derive_key(config.seed, "reversal", 0));
        SampleString x = base_jm.sample_path(a, horizon, rng);
        SampleString shifted;
        shifted.push_back(0);
        shifted.insert(shifted.end(), x.begin(), x.end());

        std::vector<std::pair<std::string, ParameterEvent>> events = {
            {"full", ParameterEvent::full()},
            {"[1]", ParameterEvent::cantor_cylinder({1})},
            {"[10]", ParameterEvent::cantor_cylinder({1, 0})},
            {"[11]", ParameterEvent::cantor_cylinder({1, 1})},
            {"[0]", ParameterEvent::cantor_cylinder({0})},
        };
        for (const auto& [tag, ev] : events) {
            PosteriorTrajectory bt = posterior_trajectory(base_jm, ev, x, horizon);
            PosteriorTrajectory et = posterior_trajectory(ext_jm, ev, shifted, horizon + 1);
            bool equal = true;
            for (size_t n = 0; n <= horizon; ++n)
                equal = equal && bt.values[n].value == et.values[n + 1].value &&
                        bt.values[n].degenerate == et.values[n + 1].degenerate;
            report.rows.push_back(flag_row("reversal-copy-equality", "event=" + tag, equal));
            for (size_t n = 0; n < et.values.size(); ++n)
                report.trajectories.push_back({n, "extended;event=" + tag, et.values[n].value,
                                               et.values[n].degenerate});
        }
    }

    auto t1 = std::chrono::steady_clock::now();
    report.metadata = {{"experiment", "reversal"},
                       {"seed", config.seed},
                       {"version", kVersion},
                       {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
    return report;
}

namespace {

void suite_chebyshev(std::vector<ReportRow>& rows, bool inject_fault) {
    struct Entry {
        const char* name;
        Prior prior;
    };
    std::vector<Entry> priors;
    priors.push_back({"two-atom", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 3)}},
                                                 {Rational(1, 2), UnitPoint{Rational(2, 3)}}})});
    priors.push_back({"quartile", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 4)}},
                                                 {Rational(1, 2), UnitPoint{Rational(3, 4)}}})});
    priors.push_back({"degenerate", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(0)}},
                                                   {Rational(1, 2), UnitPoint{Rational(1)}}})});
    priors.push_back({"point", Prior::atomic({{Rational(1), UnitPoint{Rational(2, 3)}}})});

    bool first = true;
    for (const auto& entry : priors) {
        for (const Rational& eps : {Rational(1, 10), Rational(1, 4), Rational(3, 5)}) {
            for (unsigned n : {10u, 100u, 1000u, 10000u}) {
                ChebyshevResult r = chebyshev_check(entry.prior, eps, n);
                Rational rhs = r.rhs;
                bool holds = r.holds;
                std::string params = std::string("prior=") + entry.name + ";eps=" + eps.to_string() +
                                     ";n=" + std::to_string(n);
                if (inject_fault && first) {
                    rhs = rhs * Rational(9, 10) - Rational(1, 1000000);
                    holds = r.lhs <= rhs;
                    params += ";fault=-10%";
                }
                rows.push_back(exact_row("chebyshev", params, r.lhs, rhs, holds));
                first = false;
            }
        }
    }
}

void suite_doob_maximal(std::vector<ReportRow>& rows) {
    std::vector<std::pair<std::string, JointMeasure>> models;
    models.emplace_back("lebesgue", JointMeasure(Prior::lebesgue(), Likelihood::bernoulli_product()));
    models.emplace_back("two-atom",
                        JointMeasure(Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 3)}},
                                                    {Rational(1, 2), UnitPoint{Rational(2, 3)}}}),
                                     Likelihood::bernoulli_product()));

    std::vector<std::pair<std::string, std::vector<SampleString>>> cases = {
        {"B1", {{1}}},
        {"B2", {{0}}},
        {"B3", {{1, 1}}},
        {"B4", {{0, 1}, {1, 0}}},
        {"B5", {{0, 0}, {1, 1, 1}}},
        {"B6", {{1}, {0, 1}}},
        {"B7", {}},
        {"B8", {{}}},
        {"B9", {{0, 1, 1, 0}}},
        {"B10", {{1, 0, 1}, {0, 0, 0, 1}}},
    };
    size_t depth = 12;
    for (const auto& [mname, jm] : models) {
        for (const auto& [bname, cyls] : cases) {
            DoobMaximalResult r = doob_maximal_check(jm, cyls, depth);
            ReportRow row = exact_row("doob-maximal",
                                      "model=" + mname + ";B=" + bname + ";depth=" + std::to_string(depth),
                                      r.lhs_sq, Rational(4) * r.mass_b, r.holds);
            row.decimal = render_decimal(r.lhs.evaluate(20).midpoint());
            row.width = render_decimal(r.lhs.evaluate(20).width());
            rows.push_back(row);
        }
    }
}

void suite_schnorr_bounds(std::vector<ReportRow>& rows) {
    std::vector<std::pair<std::string, Prior>> priors;
    priors.emplace_back("lebesgue", Prior::lebesgue());
    priors.emplace_back("two-atom", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 3)}},
                                                   {Rational(1, 2), UnitPoint{Rational(2, 3)}}}));
    priors.emplace_back("quartile", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 4)}},
                                                   {Rational(1, 2), UnitPoint{Rational(3, 4)}}}));
    priors.emplace_back("degenerate", Prior::atomic({{Rational(1, 2), UnitPoint{Rational(0)}},
                                                     {Rational(1, 2), UnitPoint{Rational(1)}}}));
    for (const auto& [name, prior] : priors) {
        LrfSchnorrResult r = lrf_schnorr_test(prior, 6);
        for (const auto& row : r.rows) {
            ReportRow rr = exact_row("schnorr-bound",
                                     "prior=" + name + ";n=" + std::to_string(row.n) +
                                         ";eta=" + row.eta.to_string(),
                                     row.measure, Rational(0), row.bound_holds);
            rr.rhs = "cbrt4*n^-4/3*spread";
            rr.width = render_decimal(row.bound.width());
            rows.push_back(rr);
        }
    }
}

void suite_cond_exp(std::vector<ReportRow>& rows) {
    std::vector<std::tuple<std::string, JointMeasure, ParameterEvent>> models;
    models.emplace_back("two-atom",
                        JointMeasure(Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 3)}},
                                                    {Rational(1, 2), UnitPoint{Rational(2, 3)}}}),
                                     Likelihood::bernoulli_product()),
                        ParameterEvent::points({UnitPoint{Rational(2, 3)}}));
    models.emplace_back("lebesgue",
                        JointMeasure(Prior::lebesgue(), Likelihood::bernoulli_product()),
                        ParameterEvent::interval(RatInterval::closed(Rational(0), Rational(1, 2))));
    models.emplace_back(
        "finite-simplex",
        JointMeasure(Prior::atomic({{Rational(1, 3),
                                     ParameterPoint(SimplexPoint::finite({Rational(1, 2), Rational(1, 2)}))},
                                    {Rational(2, 3),
                                     ParameterPoint(SimplexPoint::finite(
                                         {Rational(1, 4), Rational(1, 4), Rational(1, 2)}))}}),
                     Likelihood::iid_simplex()),
        ParameterEvent::points({ParameterPoint(SimplexPoint::finite({Rational(1, 2), Rational(1, 2)}))}));

    for (const auto& [name, jm, event] : models) {
        for (size_t depth = 0; depth <= 4; ++depth) {
            CondExpReport r = verify_conditional_expectation(jm, event, depth);
            rows.push_back(exact_row("cond-exp",
                                     "model=" + name + ";depth=" + std::to_string(depth) + ";subsets=" +
                                         std::to_string(r.subsets_checked),
                                     r.max_discrepancy, Rational(0), r.max_discrepancy == Rational(0)));
        }
    }
}

void suite_sigma2(std::vector<ReportRow>& rows) {
    SigmaTwoClass clopen = SigmaTwoClass::from_cylinder_pieces({{{0, 1}}});
    CoverResult c1 = sigma2_cover(clopen, Rational(1, 10));
    rows.push_back(exact_row("sigma2-cover", "case=clopen", c1.excess, Rational(1, 10),
                             c1.excess < Rational(1, 10)));

    SigmaTwoClass two = SigmaTwoClass::from_cylinder_pieces({{{0, 0}}, {{1, 1}}});
    CoverResult c2 = sigma2_cover(two, Rational(1, 100));
    rows.push_back(exact_row("sigma2-cover", "case=two-disjoint", c2.excess, Rational(1, 100),
                             c2.excess < Rational(1, 100)));

    SigmaTwoClass pt = SigmaTwoClass::from_interval_pieces({IntervalUnion({RatInterval::point(Rational(1, 2))})});
    CoverResult c3 = sigma2_cover(pt, Rational(1, 10));
    rows.push_back(exact_row("sigma2-cover", "case=point", c3.excess, Rational(1, 10),
                             c3.excess < Rational(1, 10) && c3.excess == Rational(1, 20)));

    SigmaTwoClass pieces = SigmaTwoClass::from_interval_pieces(
        {IntervalUnion({RatInterval::closed(Rational(0), Rational(1, 4))}),
         IntervalUnion({RatInterval::closed(Rational(1, 2), Rational(5, 8))})});
    CoverResult c4 = sigma2_cover(pieces, Rational(1, 10));
    rows.push_back(exact_row("sigma2-cover", "case=two-intervals", c4.excess, Rational(1, 10),
                             c4.excess < Rational(1, 10)));
}

void suite_normalization(std::vector<ReportRow>& rows, bool inject_fault) {
    JointMeasure jm(Prior::lebesgue(), Likelihood::bernoulli_product());
    bool first = true;
    for (const SampleString& sigma : {SampleString{}, SampleString{1}, SampleString{1, 0, 1}}) {
        PosteriorValue v = posterior_eval(jm, ParameterEvent::full(), sigma);
        Rational rhs(1);
        std::string bits;
        for (Symbol s : sigma) bits += std::to_string(s);
        std::string params = "sigma=" + (bits.empty() ? std::string("root") : bits);
        bool holds = v.value == rhs;
        if (inject_fault && first) {
            rhs = Rational(9, 10);
            holds = v.value <= rhs;
            params += ";fault=-10%";
        }
        rows.push_back(exact_row("posterior-normalization", params, v.value, rhs, holds));
        first = false;
    }
}

}  // namespace

RunReport run_suite(const ExperimentConfig& config) {
    reject_unknown_keys(config.payload,
                        {"experiment", "sections", "horizon", "replicas", "seed", "precision", "out",
                         "inject_fault"},
                        "suite config");
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::string> sections{"chebyshev", "doob-maximal", "schnorr-bounds", "cond-exp", "sigma2",
                                      "normalization"};
    if (config.payload.contains("sections")) {
        sections.clear();
        for (const auto& s : config.payload.at("sections")) sections.push_back(s.get<std::string>());
    }

    RunReport report;
    for (const auto& s : sections) {
        if (s == "chebyshev") suite_chebyshev(report.rows, config.inject_fault);
        else if (s == "doob-maximal") suite_doob_maximal(report.rows);
        else if (s == "schnorr-bounds") suite_schnorr_bounds(report.rows);
        else if (s == "cond-exp") suite_cond_exp(report.rows);
        else if (s == "sigma2") suite_sigma2(report.rows);
        else if (s == "normalization") suite_normalization(report.rows, config.inject_fault);
        else throw ConfigError("unknown suite section " + s);
    }

    auto t1 = std::chrono::steady_clock::now();
    report.metadata = {{"experiment", "suite"},
                       {"seed", config.seed},
                       {"version", kVersion},
                       {"sections", sections},
                       {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
    return report;
}

RunReport run_experiment(const ExperimentConfig& config) {
    const std::string& e = config.experiment;
    if (e == "doob") return run_doob(config);
    if (e == "freedman") return run_freedman(config);
    if (e == "reversal") return run_reversal(config);
    if (e == "suite") return run_suite(config);
    if (e == "chebyshev" || e == "doob-maximal" || e == "schnorr-bounds" || e == "cond-exp") {
        ExperimentConfig narrowed = config;
        narrowed.payload = Json{{"experiment", "suite"}, {"sections", Json::array({e})}};
        if (config.inject_fault) narrowed.payload["inject_fault"] = true;
        return run_suite(narrowed);
    }
    throw ConfigError("unknown experiment \"" + e + "\"");
}

}  // namespace effbayes

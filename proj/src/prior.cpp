#include "effbayes/prior.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

Prior Prior::atomic(std::vector<Atom> atoms) {
    if (atoms.empty()) throw Error("atomic prior needs at least one atom");
    Prior p;
    p.kind_ = Kind::Atomic;
    p.space_ = space_of(atoms.front().point);
    Rational total(0);
    for (const auto& a : atoms) {
        if (a.weight.sign() <= 0) throw Error("atom weights must be positive");
        if (space_of(a.point) != p.space_) throw SpaceMismatch("atoms live in different spaces");
        total += a.weight;
    }
    if (total != Rational(1)) throw Error("atom weights sum to " + total.to_string() + ", not 1");
    p.atoms_ = std::move(atoms);
    return p;
}

Prior Prior::poly_density(Polynomial density) {
    if (density.integrate(Rational(0), Rational(1)) != Rational(1))
        throw Error("density must integrate to 1 over [0,1]");
    if (!density.certify_nonnegative_on_unit())
        throw Error("density nonnegativity could not be certified on [0,1]");
    Prior p;
    p.kind_ = Kind::PolyDensity;
    p.density_ = std::move(density);
    p.space_ = Space::UnitInterval;
    return p;
}

const std::vector<Prior::Atom>& Prior::atoms() const {
    if (kind_ != Kind::Atomic) throw Error("not an atomic prior");
    return atoms_;
}

const Polynomial& Prior::density() const {
    if (kind_ != Kind::PolyDensity) throw Error("not a density prior");
    return density_;
}

Rational Prior::measure(const ParameterEvent& A) const {
    if (kind_ == Kind::Atomic) {
        Rational out(0);
        for (const auto& a : atoms_) {
            Tri t = A.membership(a.point);
            if (t == Tri::Undecided)
                throw UndecidableEvent("atom " + point_to_string(a.point) + " vs " + A.to_string());
            if (t == Tri::In) out += a.weight;
        }
        return out;
    }
    if (std::holds_alternative<FullSpaceEvent>(A.shape()))
        return A.complemented() ? Rational(0) : Rational(1);
    const auto* iv = std::get_if<IntervalUnionEvent>(&A.shape());
    if (!iv) throw UndecidableEvent("density priors support interval events only");
    IntervalUnion set = A.complemented() ? iv->set.complement() : iv->set;
    Rational out(0);
    for (const auto& part : set.parts()) out += density_.integrate(part.lo, part.hi);
    return out;
}

MomentPair Prior::moments() const {
    if (kind_ == Kind::PolyDensity) {
        Polynomial theta({Rational(0), Rational(1)});
        Polynomial theta2({Rational(0), Rational(0), Rational(1)});
        return {(density_ * theta).integrate(Rational(0), Rational(1)),
                (density_ * theta2).integrate(Rational(0), Rational(1))};
    }
    Rational alpha(0), beta(0);
    for (const auto& a : atoms_) {
        const auto* u = std::get_if<UnitPoint>(&a.point);
        if (!u) throw SpaceMismatch("moments need a prior on [0,1]");
        alpha += a.weight * u->value;
        beta += a.weight * u->value * u->value;
    }
    return {alpha, beta};
}

}  // namespace effbayes

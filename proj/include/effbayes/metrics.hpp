#pragma once

#include <optional>
#include <vector>

#include "effbayes/oracle.hpp"
#include "effbayes/point.hpp"
#include "effbayes/ratset.hpp"

namespace effbayes {

/// Hilbert-cube metric d(x,y) = sum_n 2^-(n+1) |x(n)-y(n)| as an enclosure
/// oracle. Accepts Simplex and HilbertCube points; exact (width 0) whenever
/// both points are simplex points with all-zero tails or are equal.
RealOracle hilbert_distance(const ParameterPoint& x, const ParameterPoint& y);

/// The two families of effectively closed sets carving the simplex out of the
/// Hilbert cube:
///   C_n = { y : sum_i y(i) <= 1 - 1/(n+1) },
///   D_n = { y : sum_{i<=n} y(i) >= 1 + 1/(n+1) }.
enum class SimplexClosedSet { LowSum, HighWindow };

/// Distance from a simplex point to C_n / D_n, in closed form (exact).
/// D_0 is empty in the Hilbert cube; its distance is "infinite" (nullopt),
/// and the corresponding reciprocal in d0 is 0.
std::optional<Rational> simplex_closed_set_distance(const SimplexPoint& x, size_t n, SimplexClosedSet which);

/// Position `pos` of the interleaved list C_0, D_0, C_1, D_1, ... used by d0.
/// Returns 1/d(x, set) as an exact rational (0 for the empty D_0).
Rational d0_reciprocal_term(const SimplexPoint& x, size_t pos);

/// The complete metric making the simplex a computable Polish subspace:
/// d0(x,y) = d(x,y) + sum_pos min(2^-(pos+1), |1/d(x,S_pos) - 1/d(y,S_pos)|)
/// over the interleaved list above.
RealOracle d0_distance(const SimplexPoint& x, const SimplexPoint& y);

/// Exact coordinate projection.
Rational projection(const SimplexPoint& x, size_t i);

/// A finite open box constraint: coordinate j < box.size() restricted to
/// box[j] (one of (p,q), [0,q), (p,1], [0,1]); coordinates beyond are free.
using CoordinateBox = std::vector<RatInterval>;

/// pi_i(box intersect simplex) as an explicit finite union of rational
/// intervals (at most one). Throws EmptyBox when the lower bounds already
/// sum past 1.
std::vector<RatInterval> projection_image(const CoordinateBox& box, size_t i);

/// Piecewise-multilinear function on [0,1]^m over a rational grid:
/// per-dimension breakpoints (starting at 0, ending at 1) and values at all
/// grid vertices, multilinearly interpolated within each cell.
struct PiecewiseMultilinear {
    std::vector<std::vector<Rational>> breakpoints;  // one sorted list per dim
    std::vector<Rational> values;                    // row-major over the grid

    size_t dims() const { return breakpoints.size(); }
    size_t grid_index(const std::vector<size_t>& idx) const;
    Rational eval(const std::vector<Rational>& t) const;
    void validate() const;
};

/// Exact extremum; attained at a grid vertex.
Rational compact_extremum(const PiecewiseMultilinear& f, bool maximize);

/// Piecewise-linear Urysohn bump around `center`:
/// clamp((eps_k - d0(theta, center)) / (eps_k - eps_k1), 0, 1).
/// Equals 1 when d0 <= eps_k1 and 0 when d0 >= eps_k.
RealOracle bump(const SimplexPoint& center, const Rational& eps_k, const Rational& eps_k1,
                const SimplexPoint& theta);

}  // namespace effbayes

#include "scatter1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

double eval_square_well(const SquareWell& w, double x0) {
    return x0 <= w.R ? -w.beta0 * w.beta0 : 0.0;
}

double eval_tabulated(const Tabulated& t, double x0) {
    const auto& nodes = t.nodes;
    if (x0 <= nodes.front()[0]) return nodes.front()[1];
    if (x0 > nodes.back()[0]) return 0.0;
    auto it = std::lower_bound(
        nodes.begin(), nodes.end(), x0,
        [](const std::array<double, 2>& n, double x) { return n[0] < x; });
    if (it->at(0) == x0) return it->at(1);
    auto lo = std::prev(it);
    double w = (x0 - lo->at(0)) / (it->at(0) - lo->at(0));
    return lo->at(1) + w * (it->at(1) - lo->at(1));
}

}  // namespace

double evaluate(const PotentialSpec& spec, double x0) {
    if (x0 < 0.0)
        throw DomainError("potential evaluated at negative coordinate x0=" +
                          std::to_string(x0));
    if (x0 > spec.effective_range_R) return 0.0;
    return std::visit(
        [x0](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SquareWell>)
                return eval_square_well(k, x0);
            else if constexpr (std::is_same_v<T, Tabulated>)
                return eval_tabulated(k, x0);
            else
                return k.u(x0);
        },
        spec.kind);
}

PotentialSpec make_square_well(double beta0, double R) {
    if (!(beta0 > 0.0) || !std::isfinite(beta0))
        throw DomainError("square well requires beta0 > 0");
    if (!(R > 0.0) || !std::isfinite(R))
        throw DomainError("square well requires R > 0");
    return {SquareWell{beta0, R}, R};
}

PotentialSpec make_tabulated(std::vector<std::array<double, 2>> nodes) {
    if (nodes.size() < 2)
        throw DomainError("tabulated potential requires at least two nodes");
    if (nodes.front()[0] < 0.0)
        throw DomainError("tabulated nodes must lie on the half-line x0 >= 0");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i][0] > nodes[i - 1][0]))
            throw DomainError("tabulated nodes must have strictly ascending x0");
    double R = nodes.back()[0];
    if (!(R > 0.0) || !std::isfinite(R))
        throw DomainError("tabulated potential must extend to positive range");
    return {Tabulated{std::move(nodes)}, R};
}

PotentialSpec make_analytic_windowed(std::function<double(double)> u,
                                     double cutoff) {
    if (!u) throw DomainError("windowed potential requires a callable profile");
    if (!(cutoff > 0.0) || !std::isfinite(cutoff))
        throw DomainError("windowed potential requires a positive finite cutoff");
    return {AnalyticWindowed{std::move(u), cutoff}, cutoff};
}

}  // namespace scatter1d

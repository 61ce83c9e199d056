#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/series.hpp"

namespace qtheta {

struct Comparison {
    bool pass = false;
    std::optional<Discrepancy> first;
    Exponent checked;
};

Comparison compare(const Series& lhs, const Series& rhs, Exponent upto);

struct Check {
    std::string label;
    Comparison cmp;
};

struct CheckList {
    std::vector<Check> items;

    bool pass() const;
    const Check* first_failure() const;
    void add(std::string label, const Series& lhs, const Series& rhs, Exponent upto);
};

using Sides = std::pair<Series, Series>;

// Builds both sides at working orders target + slack, doubling the slack until
// each side is certified through target. Laurent prefactors and negative
// monomial powers lower the certified order, which is why this is needed.
Sides at_target(const std::function<Sides(Exponent working)>& build, Exponent target, long slack = 0);

}  // namespace qtheta

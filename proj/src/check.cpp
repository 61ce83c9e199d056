#include "qtheta/check.hpp"

#include "qtheta/errors.hpp"

namespace qtheta {

Comparison compare(const Series& lhs, const Series& rhs, Exponent upto) {
    Comparison c;
    c.checked = upto;
    c.first = first_difference(lhs, rhs, upto);
    c.pass = !c.first;
    return c;
}

bool CheckList::pass() const { return first_failure() == nullptr; }

const Check* CheckList::first_failure() const {
    for (const auto& c : items)
        if (!c.cmp.pass) return &c;
    return nullptr;
}

void CheckList::add(std::string label, const Series& lhs, const Series& rhs, Exponent upto) {
    items.push_back({std::move(label), compare(lhs, rhs, upto)});
}

Sides at_target(const std::function<Sides(Exponent)>& build, Exponent target, long slack) {
    long extra = slack;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Sides s = build(target + Exponent(extra));
        if (s.first.order() >= target && s.second.order() >= target) return s;
        const Exponent got = std::min(s.first.order(), s.second.order());
        const long missing = (target - got).halves() / 2 + 1;
        extra = std::max(2 * extra, extra + missing) + 4;
    }
    throw Error("could not certify both sides through q^" + target.str());
}

}  // namespace qtheta

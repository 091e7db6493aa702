#include "mbound/provider.hpp"

#include "mbound/errors.hpp"

namespace mbound {

Count LocalIndexProvider::count(const CountQuery& query) const {
    if (query.exclude)
        return index_.conjunction_but_not_count(query.include, *query.exclude);
    return index_.conjunction_count(query.include);
}

namespace {

Count positive_count(const CountProvider& provider, const Query& q) {
    Count n = provider.count(CountQuery{q, std::nullopt});
    if (n == 0)
        throw zero_count_error("query '" + q.label() + "' has count 0; the bound is undefined");
    return n;
}

}  // namespace

double resolved_joint_count(const CountProvider& provider, const Query& a, const Query& b) {
    Count n_ab = provider.count(CountQuery{a.conjoined_with(b), std::nullopt});
    if (provider.exact()) return static_cast<double>(n_ab);

    CountQuery exclusion{a, b};
    if (!provider.can_count(exclusion)) return static_cast<double>(n_ab);

    Count n_a = provider.count(CountQuery{a, std::nullopt});
    Count n_a_not_b = provider.count(exclusion);
    return corrected_joint_count(n_a, n_ab, n_a_not_b);
}

BoundReport bound_report(const CountProvider& provider, const Query& a, const Query& b,
                         const BoundOptions& options) {
    Count universe = options.universe_override.value_or(provider.universe());
    if (universe == 0)
        throw zero_count_error("universe size is 0; no bound is defined");

    Count n_a = positive_count(provider, a);

    if (a == b) {
        MeaningBound mb = self_meaning_bound(n_a, universe, options.epsilon);
        return BoundReport{a.label(),
                           b.label(),
                           n_a,
                           n_a,
                           n_a,
                           static_cast<double>(n_a),
                           false,
                           universe,
                           1.0,
                           absolute_weight(n_a, universe),
                           mb};
    }

    Count n_b = positive_count(provider, b);
    Count n_ab_raw = provider.count(CountQuery{a.conjoined_with(b), std::nullopt});
    double n_ab_used = resolved_joint_count(provider, a, b);
    bool corrected = n_ab_used != static_cast<double>(n_ab_raw);

    MeaningBound mb;
    if (corrected) {
        mb = meaning_bound(n_a, n_b, n_ab_used, universe, options.epsilon);
    } else {
        mb = meaning_bound(BoundInputs::checked(n_a, n_b, n_ab_raw, universe),
                           options.epsilon);
    }

    return BoundReport{a.label(),
                       b.label(),
                       n_a,
                       n_b,
                       n_ab_raw,
                       n_ab_used,
                       corrected,
                       universe,
                       n_ab_used / static_cast<double>(n_a),
                       absolute_weight(n_b, universe),
                       mb};
}

MeaningBound bound_between(const CountProvider& provider, const Query& a, const Query& b,
                           const BoundOptions& options) {
    return bound_report(provider, a, b, options).bound;
}

}  // namespace mbound

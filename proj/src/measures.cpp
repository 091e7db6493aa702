#include "mbound/measures.hpp"

#include <string>

namespace mbound {

namespace {

using u128 = unsigned __int128;

double ratio(u128 num, u128 den) {
    return static_cast<double>(static_cast<long double>(num) /
                               static_cast<long double>(den));
}

}  // namespace

std::string_view to_string(AttractionClass c) {
    switch (c) {
        case AttractionClass::Attractive: return "attractive";
        case AttractionClass::Neutral: return "neutral";
        case AttractionClass::Repulsive: return "repulsive";
    }
    return "neutral";
}

AttractionClass attraction_class_from_string(std::string_view s) {
    if (s == "attractive") return AttractionClass::Attractive;
    if (s == "repulsive") return AttractionClass::Repulsive;
    if (s == "neutral") return AttractionClass::Neutral;
    throw count_domain_error("unknown attraction class '" + std::string(s) + "'");
}

AttractionClass classify(double value, double epsilon) {
    if (value > 1.0 + epsilon) return AttractionClass::Attractive;
    if (value < 1.0 - epsilon) return AttractionClass::Repulsive;
    return AttractionClass::Neutral;
}

BoundInputs BoundInputs::checked(Count n_a, Count n_b, Count n_ab, Count n_www) {
    if (n_ab > n_a || n_ab > n_b)
        throw count_domain_error("joint count exceeds a single count: n(A,B)=" +
                                 std::to_string(n_ab) + ", n(A)=" + std::to_string(n_a) +
                                 ", n(B)=" + std::to_string(n_b));
    if (n_a > n_www || n_b > n_www)
        throw count_domain_error("single count exceeds the universe size " +
                                 std::to_string(n_www));
    return BoundInputs{n_a, n_b, n_ab, n_www};
}

double relative_weight(Count n_ab, Count n_a) {
    if (n_a == 0)
        throw zero_count_error("relative weight undefined: n(A) = 0");
    if (n_ab > n_a)
        throw count_domain_error("n(A,B)=" + std::to_string(n_ab) +
                                 " exceeds n(A)=" + std::to_string(n_a));
    return ratio(n_ab, n_a);
}

double absolute_weight(Count n_a, Count n_www) {
    if (n_www == 0)
        throw zero_count_error("absolute weight undefined: n(www) = 0");
    if (n_a > n_www)
        throw count_domain_error("n(A)=" + std::to_string(n_a) +
                                 " exceeds the universe size " + std::to_string(n_www));
    return ratio(n_a, n_www);
}

MeaningBound meaning_bound(const BoundInputs& in, double epsilon) {
    if (in.n_a == 0 || in.n_b == 0)
        throw zero_count_error("meaning bound undefined: n(A) or n(B) is 0");
    if (in.n_www == 0)
        throw zero_count_error("meaning bound undefined: universe size is 0");
    double value = ratio(u128(in.n_ab) * in.n_www, u128(in.n_a) * in.n_b);
    return MeaningBound{value, classify(value, epsilon)};
}

MeaningBound meaning_bound(Count n_a, Count n_b, double joint, Count n_www,
                           double epsilon) {
    if (n_a == 0 || n_b == 0)
        throw zero_count_error("meaning bound undefined: n(A) or n(B) is 0");
    if (n_www == 0)
        throw zero_count_error("meaning bound undefined: universe size is 0");
    if (n_a > n_www || n_b > n_www)
        throw count_domain_error("single count exceeds the universe size " +
                                 std::to_string(n_www));
    // A corrected joint never exceeds min(n(A), n(B)) mathematically, but
    // the division may round a hair above it; allow that one-ulp overshoot.
    double cap = static_cast<double>(n_a < n_b ? n_a : n_b) * (1.0 + 1e-12);
    if (joint < 0.0 || joint > cap)
        throw count_domain_error("joint count " + std::to_string(joint) +
                                 " outside [0, min(n(A), n(B))]");
    long double den = static_cast<long double>(u128(n_a) * n_b);
    long double num = static_cast<long double>(joint) * static_cast<long double>(n_www);
    double value = static_cast<double>(num / den);
    return MeaningBound{value, classify(value, epsilon)};
}

MeaningBound self_meaning_bound(Count n_a, Count n_www, double epsilon) {
    if (n_a == 0)
        throw zero_count_error("self meaning bound undefined: n(A) = 0");
    if (n_www == 0)
        throw zero_count_error("self meaning bound undefined: universe size is 0");
    if (n_a > n_www)
        throw count_domain_error("n(A)=" + std::to_string(n_a) +
                                 " exceeds the universe size " + std::to_string(n_www));
    double value = ratio(n_www, n_a);
    return MeaningBound{value, classify(value, epsilon)};
}

ConsistencyReport consistency_factor(Count n_a, Count n_ab_raw, Count n_a_not_b_raw) {
    Count sum = n_ab_raw + n_a_not_b_raw;
    if (sum == 0)
        throw zero_count_error("correction factor undefined: n(A,B) + n(A,not B) = 0");
    bool consistent = (sum == n_a);
    double factor = consistent ? 1.0 : ratio(n_a, sum);
    return ConsistencyReport{n_a, n_ab_raw, n_a_not_b_raw, factor, consistent};
}

double corrected_joint_count(Count n_a, Count n_ab_raw, Count n_a_not_b_raw) {
    Count sum = n_ab_raw + n_a_not_b_raw;
    if (sum == 0)
        throw zero_count_error("correction undefined: n(A,B) + n(A,not B) = 0");
    if (sum == n_a) return static_cast<double>(n_ab_raw);
    return ratio(u128(n_ab_raw) * n_a, sum);
}

double corrected_joint_real(double n_a, double n_ab_raw, double n_a_not_b_raw) {
    long double sum = static_cast<long double>(n_ab_raw) + n_a_not_b_raw;
    if (sum <= 0.0L)
        throw zero_count_error("correction undefined: n(A,B) + n(A,not B) = 0");
    return static_cast<double>(static_cast<long double>(n_ab_raw) * n_a / sum);
}

}  // namespace mbound

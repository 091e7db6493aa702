#pragma once

#include <cstdint>
#include <string_view>

#include "mbound/errors.hpp"

namespace mbound {

// Number of documents (pages) matching a query. Page-level semantics: a
// document counts once no matter how often a term occurs in it.
using Count = std::uint64_t;

inline constexpr double kDefaultEpsilon = 1e-9;

enum class AttractionClass { Attractive, Neutral, Repulsive };

std::string_view to_string(AttractionClass c);
AttractionClass attraction_class_from_string(std::string_view s);

struct MeaningBound {
    double value;
    AttractionClass cls;
};

// The four counts feeding a bound computation. construct with checked()
// to enforce n_ab <= min(n_a, n_b) <= n_www; counts coming from an
// inconsistent source must go through the correction path first.
struct BoundInputs {
    Count n_a;
    Count n_b;
    Count n_ab;
    Count n_www;

    static BoundInputs checked(Count n_a, Count n_b, Count n_ab, Count n_www);
};

struct ConsistencyReport {
    Count n_a;
    Count n_ab_raw;
    Count n_a_not_b_raw;
    double factor;
    bool consistent;
};

// value > 1 + epsilon is attractive, value < 1 - epsilon repulsive,
// anything in the band is neutral. Total for every finite value >= 0.
AttractionClass classify(double value, double epsilon = kDefaultEpsilon);

// n(A,B) / n(A). Throws zero_count_error for n_a == 0 (the weight is
// undefined, never silently zero) and count_domain_error if n_ab > n_a.
double relative_weight(Count n_ab, Count n_a);

// n(A) / n(www). Throws zero_count_error for an empty universe and
// count_domain_error if n_a exceeds it.
double absolute_weight(Count n_a, Count n_www);

// n(A,B) * n(www) / (n(A) * n(B)). Products are formed in 128-bit
// integers, so counts up to 2^63 cannot overflow; the final quotient is
// one long double division (<= 1 ulp error at 64-bit mantissa).
MeaningBound meaning_bound(const BoundInputs& in, double epsilon = kDefaultEpsilon);

// Same bound with a real-valued joint count, as produced by the count
// correction. joint must lie in [0, min(n_a, n_b)].
MeaningBound meaning_bound(Count n_a, Count n_b, double joint, Count n_www,
                           double epsilon = kDefaultEpsilon);

// n(www) / n(A); equal to meaning_bound with n_b = n_ab = n_a.
MeaningBound self_meaning_bound(Count n_a, Count n_www, double epsilon = kDefaultEpsilon);

// factor = n(A) / (n(A,B) + n(A,not B)); exactly 1 and consistent=true
// when the two raw counts partition n(A). Throws zero_count_error when
// both raw counts are zero.
ConsistencyReport consistency_factor(Count n_a, Count n_ab_raw, Count n_a_not_b_raw);

// n(A,B) * factor, kept real-valued; rounding to an integer is a display
// decision. Identity on consistent counts.
double corrected_joint_count(Count n_a, Count n_ab_raw, Count n_a_not_b_raw);

// Real-valued kernel of the correction, used when already-corrected
// (fractional) counts are fed back through the pipeline. Named apart
// from corrected_joint_count so integer call sites never face an
// int -> double vs int -> Count overload ambiguity.
double corrected_joint_real(double n_a, double n_ab_raw, double n_a_not_b_raw);

}  // namespace mbound

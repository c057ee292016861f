#pragma once

#include "conicpos/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conicpos {

enum class ParabolaEllipsePosition {
    Indeterminate = 0,
    Separated = 1,
    ExternallyTangent = 2,
    EllipseInsideParabola = 3,
    TwoIntersections = 4,
    FourIntersections = 5,
    TwoIntersectionsAndInnerTangent = 6,
    OneInnerTangent = 7,
    TwoInnerTangents = 8,
    OneIntersectionAndInnerTangent = 9,
};

enum class HyperbolaEllipsePosition {
    Indeterminate = 0,
    Separated = 1,
    TwoIntersections = 2,
    OneInnerTangent = 3,
    TwoInnerTangents = 4,
    TwoIntersectionsAndInnerTangent = 5,
    OneOuterTangent = 6,
    TwoOuterTangents = 7,
    TwoIntersectionsAndOuterTangent = 8,
    FourIntersections = 9,
    EllipseInsideHyperbola = 10,
    OneIntersectionAndInnerTangent = 11,
};

constexpr int case_number(ParabolaEllipsePosition p) noexcept { return static_cast<int>(p); }
constexpr int case_number(HyperbolaEllipsePosition p) noexcept { return static_cast<int>(p); }

constexpr std::string_view to_string(ParabolaEllipsePosition p) noexcept
{
    switch (p) {
    case ParabolaEllipsePosition::Indeterminate: return "Indeterminate";
    case ParabolaEllipsePosition::Separated: return "Separated";
    case ParabolaEllipsePosition::ExternallyTangent: return "ExternallyTangent";
    case ParabolaEllipsePosition::EllipseInsideParabola: return "EllipseInsideParabola";
    case ParabolaEllipsePosition::TwoIntersections: return "TwoIntersections";
    case ParabolaEllipsePosition::FourIntersections: return "FourIntersections";
    case ParabolaEllipsePosition::TwoIntersectionsAndInnerTangent: return "TwoIntersectionsAndInnerTangent";
    case ParabolaEllipsePosition::OneInnerTangent: return "OneInnerTangent";
    case ParabolaEllipsePosition::TwoInnerTangents: return "TwoInnerTangents";
    case ParabolaEllipsePosition::OneIntersectionAndInnerTangent: return "OneIntersectionAndInnerTangent";
    }
    return "?";
}

constexpr std::string_view to_string(HyperbolaEllipsePosition p) noexcept
{
    switch (p) {
    case HyperbolaEllipsePosition::Indeterminate: return "Indeterminate";
    case HyperbolaEllipsePosition::Separated: return "Separated";
    case HyperbolaEllipsePosition::TwoIntersections: return "TwoIntersections";
    case HyperbolaEllipsePosition::OneInnerTangent: return "OneInnerTangent";
    case HyperbolaEllipsePosition::TwoInnerTangents: return "TwoInnerTangents";
    case HyperbolaEllipsePosition::TwoIntersectionsAndInnerTangent: return "TwoIntersectionsAndInnerTangent";
    case HyperbolaEllipsePosition::OneOuterTangent: return "OneOuterTangent";
    case HyperbolaEllipsePosition::TwoOuterTangents: return "TwoOuterTangents";
    case HyperbolaEllipsePosition::TwoIntersectionsAndOuterTangent: return "TwoIntersectionsAndOuterTangent";
    case HyperbolaEllipsePosition::FourIntersections: return "FourIntersections";
    case HyperbolaEllipsePosition::EllipseInsideHyperbola: return "EllipseInsideHyperbola";
    case HyperbolaEllipsePosition::OneIntersectionAndInnerTangent: return "OneIntersectionAndInnerTangent";
    }
    return "?";
}

/// One named quantity of a sign trace, e.g. {"I4", -}.
struct SignEntry {
    std::string name;
    Sign sign;
    friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

/// Outcome of a sign-condition classifier.
///
/// `matched` lists every condition set that evaluated true (exactly one for a
/// well-formed exact input); `unresolved` names the quantities whose float
/// sign fell under tolerance when the verdict is Indeterminate.
template <class Position>
struct Verdict {
    Position position = Position::Indeterminate;
    std::vector<int> matched;
    std::vector<SignEntry> trace;
    std::vector<std::string> unresolved;
};

/// Kleene three-valued truth for condition sets over possibly Unknown signs.
class Truth {
public:
    enum Value : signed char { False = 0, True = 1, Unknown = 2 };

    constexpr Truth(Value v) : v_(v) {}
    constexpr Truth(bool b) : v_(b ? True : False) {}

    constexpr bool is_true() const noexcept { return v_ == True; }
    constexpr bool is_false() const noexcept { return v_ == False; }
    constexpr bool is_unknown() const noexcept { return v_ == Unknown; }

    friend constexpr Truth operator&&(Truth a, Truth b)
    {
        if (a.v_ == False || b.v_ == False)
            return False;
        if (a.v_ == Unknown || b.v_ == Unknown)
            return Unknown;
        return True;
    }
    friend constexpr Truth operator||(Truth a, Truth b)
    {
        if (a.v_ == True || b.v_ == True)
            return True;
        if (a.v_ == Unknown || b.v_ == Unknown)
            return Unknown;
        return False;
    }
    friend constexpr Truth operator!(Truth a)
    {
        return a.v_ == Unknown ? Truth(Unknown) : Truth(a.v_ == False);
    }

private:
    Value v_;
};

namespace cond {

constexpr Truth test(Sign s, bool pos, bool zero, bool neg)
{
    switch (s) {
    case Sign::Positive: return pos;
    case Sign::Zero: return zero;
    case Sign::Negative: return neg;
    case Sign::Unknown: return Truth::Unknown;
    }
    return Truth::Unknown;
}

constexpr Truth gt0(Sign s) { return test(s, true, false, false); }
constexpr Truth lt0(Sign s) { return test(s, false, false, true); }
constexpr Truth eq0(Sign s) { return test(s, false, true, false); }
constexpr Truth ne0(Sign s) { return test(s, true, false, true); }
constexpr Truth ge0(Sign s) { return test(s, true, true, false); }
constexpr Truth le0(Sign s) { return test(s, false, true, true); }

/// Var(...) == n, Unknown when the count is unavailable.
constexpr Truth var_is(const std::optional<int>& v, int n)
{
    return v ? Truth(*v == n) : Truth(Truth::Unknown);
}

constexpr Truth var_gt(const std::optional<int>& v, int n)
{
    return v ? Truth(*v > n) : Truth(Truth::Unknown);
}

} // namespace cond

namespace detail {

/// Resolves a decision list: exactly one definitely-true set with no
/// undecided competitors gives the case; undecided sets give Indeterminate.
template <class Position>
void resolve(Verdict<Position>& v, const std::vector<Truth>& sets, std::string_view what)
{
    bool any_unknown = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].is_true())
            v.matched.push_back(static_cast<int>(i) + 1);
        any_unknown = any_unknown || sets[i].is_unknown();
    }
    if (any_unknown) {
        for (const SignEntry& e : v.trace)
            if (e.sign == Sign::Unknown)
                v.unresolved.push_back(e.name);
        v.position = Position::Indeterminate;
        return;
    }
    if (v.matched.empty())
        throw Error(ErrorCode::NoCaseMatched, std::string(what) + ": no condition set holds");
    v.position = static_cast<Position>(v.matched.front());
}

} // namespace detail

} // namespace conicpos

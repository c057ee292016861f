#pragma once

// Request/report plumbing behind the conicpos command-line tool: parsing,
// dispatch to the classifiers, optional oracle verification, parameter
// sweeps, JSON lines and SVG figures.

#include "conicpos/oracle.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <istream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace conicpos::cli {

enum class Mode { Auto, ParabolaEllipse, HyperbolaEllipse };
enum class Arithmetic { Exact, Float };

using Coefficients = std::array<std::string, 6>; // A B C D E F

struct Request {
    Mode mode = Mode::Auto;
    Arithmetic arithmetic = Arithmetic::Exact;
    double tol = 1e-10;
    Coefficients conicA, conicB;
    bool verify = false;
    std::optional<std::string> svgPath;
    std::optional<std::string> counterexampleLog;
    // sweep target pair and number of steps
    std::optional<std::pair<Coefficients, Coefficients>> sweepTo;
    int steps = 10;
};

struct Report {
    std::string family; // "parabola-ellipse" or "hyperbola-ellipse"
    std::string arithmetic = "exact";
    int caseNumber = 0;
    std::string caseName;
    std::vector<int> matched;
    std::vector<SignEntry> signTrace;
    std::vector<std::string> unresolved;
    std::optional<int> oracleCase;    // root-pattern verdict, when the canonical form is rational
    std::optional<std::string> coarse; // "ok" or the geometric disagreement
    std::int64_t timingMicros = 0;
    Coefficients curve, ellipse; // the classified pair, curve first

    friend bool operator==(const Report&, const Report&) = default;
};

struct SweepSample {
    std::string t; // i/N
    std::optional<Report> report;
    std::optional<std::string> error; // e.g. "DegenerateInput"
};

struct SweepReport {
    std::vector<SweepSample> samples;
    std::vector<std::pair<int, int>> changes; // adjacent sample indices whose case differs
};

constexpr std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::Auto: return "auto";
    case Mode::ParabolaEllipse: return "parabola-ellipse";
    case Mode::HyperbolaEllipse: return "hyperbola-ellipse";
    }
    return "?";
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "auto")
        return Mode::Auto;
    if (s == "parabola-ellipse")
        return Mode::ParabolaEllipse;
    if (s == "hyperbola-ellipse")
        return Mode::HyperbolaEllipse;
    throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(s) + "'");
}

/// Exit status for an error code.
constexpr int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::DegenerateInput:
    case ErrorCode::AllZero: return 3;
    case ErrorCode::IndeterminateSign: return 4;
    case ErrorCode::RoleMismatch: return 5;
    case ErrorCode::IoError: return 6;
    default: return 1;
    }
}

// ---------------------------------------------------------------------------
// Input

inline Coefficients parse_line(const std::string& line)
{
    std::istringstream is(line);
    Coefficients c;
    for (auto& s : c)
        if (!(is >> s))
            throw Error(ErrorCode::ParseError, "expected six coefficients in '" + line + "'");
    std::string extra;
    if (is >> extra)
        throw Error(ErrorCode::ParseError, "trailing token '" + extra + "' in '" + line + "'");
    for (const auto& s : c)
        parse_rational(s);
    return c;
}

/// Two conics, one per line; blank lines and '#' comments are skipped.
inline std::pair<Coefficients, Coefficients> read_pair(std::istream& in)
{
    std::vector<Coefficients> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        rows.push_back(parse_line(line));
    }
    if (rows.size() != 2)
        throw Error(ErrorCode::ParseError, "expected two conics, found " + std::to_string(rows.size()));
    return {rows[0], rows[1]};
}

inline std::pair<Coefficients, Coefficients> read_pair_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    return read_pair(in);
}

inline Conic<Rational> to_conic(const Coefficients& c)
{
    std::array<Rational, 6> v;
    for (std::size_t i = 0; i < 6; ++i)
        v[i] = parse_rational(c[i]);
    return conic_from_equation(v[0], v[1], v[2], v[3], v[4], v[5]);
}

inline Coefficients to_coefficients(const Conic<Rational>& c)
{
    const auto eq = equation_of(c);
    Coefficients out;
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = eq[i].get_str();
    return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace detail {

inline ConicClass checked_type(const Conic<Rational>& c, const char* which)
{
    const ConicClass t = classify_type(c);
    if (t == ConicClass::Degenerate)
        throw Error(ErrorCode::DegenerateInput, std::string(which) + " is degenerate");
    return t;
}

template <class Position>
void fill_verdict(Report& r, const Verdict<Position>& v)
{
    r.caseNumber = case_number(v.position);
    r.caseName = std::string(to_string(v.position));
    r.matched = v.matched;
    r.signTrace = v.trace;
    r.unresolved = v.unresolved;
}

inline Conic<ApproxScalar> to_float(const Conic<Rational>& c, double tol)
{
    return convert<ApproxScalar>(c, [tol](const Rational& x) {
        const double v = x.get_d();
        return ApproxScalar(v, tol, std::fabs(v));
    });
}

inline void log_counterexample(const Request& req, const Report& r, const std::string& kind,
                               const std::string& other)
{
    if (!req.counterexampleLog)
        return;
    static std::mutex mu;
    const std::lock_guard lock(mu);
    std::ofstream out(*req.counterexampleLog, std::ios::app);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open " + *req.counterexampleLog);
    nlohmann::json j{{"family", r.family}, {"curve", r.curve},     {"ellipse", r.ellipse},
                     {"case", r.caseNumber}, {"check", kind},     {"oracle", other}};
    out << j.dump() << '\n';
}

template <class Position>
std::string coarse_check(const Conic<Rational>& curve, const Conic<Rational>& ellipse, Position pos)
{
    const IntersectionSummary s = intersect_conics(curve, ellipse);
    const std::string miss = coarse_mismatch(expected_coarse(pos), coarse_class(s, curve, ellipse));
    return miss.empty() ? std::string("ok") : miss;
}

inline void verify(const Request& req, Report& r, const Conic<Rational>& curve, const Conic<Rational>& ellipse,
                   bool parabola)
{
    if (parabola) {
        const auto canon = reduce_parabola_pair(curve, ellipse).first;
        if (canon.aSq.is_rational() && canon.xcSq.is_rational() && canon.yc.is_rational()) {
            const CanonicalParabolaCircle<Rational> c{canon.aSq.p(), canon.xcSq.p(), canon.yc.p(),
                                                      canon.deltaSq.p()};
            r.oracleCase = case_number(root_pattern_classify_parabola(c));
        }
        r.coarse = coarse_check(curve, ellipse, static_cast<ParabolaEllipsePosition>(r.caseNumber));
    } else {
        const auto canon = reduce_hyperbola_pair(curve, ellipse).first;
        if (canon.aSq.is_rational() && canon.bSq.is_rational() && canon.xcSq.is_rational() &&
            canon.ycSq.is_rational()) {
            const CanonicalHyperbolaCircle<Rational> c{canon.aSq.p(), canon.bSq.p(), canon.xcSq.p(),
                                                       canon.ycSq.p(), canon.deltaSq.p()};
            r.oracleCase = case_number(root_pattern_classify_hyperbola(c));
        }
        r.coarse = coarse_check(curve, ellipse, static_cast<HyperbolaEllipsePosition>(r.caseNumber));
    }
    if (r.oracleCase && *r.oracleCase != r.caseNumber)
        log_counterexample(req, r, "root-pattern", std::to_string(*r.oracleCase));
    if (r.coarse != "ok")
        log_counterexample(req, r, "coarse", *r.coarse);
}

} // namespace detail

/// Orders the pair as (curve, ellipse) per the mode; throws DegenerateInput
/// or RoleMismatch.
inline std::tuple<Conic<Rational>, Conic<Rational>, bool> order_pair(Mode mode, const Conic<Rational>& a,
                                                                     const Conic<Rational>& b)
{
    const ConicClass ta = detail::checked_type(a, "conic A");
    const ConicClass tb = detail::checked_type(b, "conic B");
    auto is_curve = [](ConicClass t) { return t == ConicClass::Parabola || t == ConicClass::Hyperbola; };
    if (mode == Mode::Auto) {
        if (is_curve(ta) && tb == ConicClass::RealEllipse)
            return {a, b, ta == ConicClass::Parabola};
        if (is_curve(tb) && ta == ConicClass::RealEllipse)
            return {b, a, tb == ConicClass::Parabola};
        throw Error(ErrorCode::RoleMismatch, "need one real ellipse and one parabola or hyperbola, got " +
                                                 std::string(to_string(ta)) + " and " +
                                                 std::string(to_string(tb)));
    }
    const ConicClass want = mode == Mode::ParabolaEllipse ? ConicClass::Parabola : ConicClass::Hyperbola;
    if (ta != want)
        throw Error(ErrorCode::RoleMismatch, "conic A is " + std::string(to_string(ta)) + ", expected " +
                                                 std::string(to_string(want)));
    if (tb != ConicClass::RealEllipse)
        throw Error(ErrorCode::RoleMismatch, "conic B is " + std::string(to_string(tb)) + ", expected RealEllipse");
    return {a, b, want == ConicClass::Parabola};
}

/// Classifies one pair. Float mode throws IndeterminateSign naming the
/// quantities that fell under tolerance.
inline Report classify_pair(const Request& req, const Conic<Rational>& a, const Conic<Rational>& b)
{
    const auto [curve, ellipse, parabola] = order_pair(req.mode, a, b);
    Report r;
    r.family = parabola ? "parabola-ellipse" : "hyperbola-ellipse";
    r.arithmetic = req.arithmetic == Arithmetic::Exact ? "exact" : "float";
    r.curve = to_coefficients(curve);
    r.ellipse = to_coefficients(ellipse);

    const auto start = std::chrono::steady_clock::now();
    if (req.arithmetic == Arithmetic::Exact) {
        if (parabola)
            detail::fill_verdict(r, parabola::analyze_general(curve, ellipse));
        else
            detail::fill_verdict(r, hyperbola::analyze_general(curve, ellipse));
    } else {
        const Conic<ApproxScalar> fc = detail::to_float(curve, req.tol), fe = detail::to_float(ellipse, req.tol);
        if (parabola)
            detail::fill_verdict(r, parabola::analyze_general(fc, fe));
        else
            detail::fill_verdict(r, hyperbola::analyze_general(fc, fe));
    }
    r.timingMicros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

    if (r.caseNumber == 0) {
        std::string names;
        for (const auto& n : r.unresolved)
            names += (names.empty() ? "" : ", ") + n;
        throw Error(ErrorCode::IndeterminateSign, "signs below tolerance: " + names);
    }
    if (req.verify)
        detail::verify(req, r, curve, ellipse, parabola);
    return r;
}

inline Report run(const Request& req)
{
    return classify_pair(req, to_conic(req.conicA), to_conic(req.conicB));
}

namespace detail {

inline Conic<Rational> lerp(const Conic<Rational>& p, const Conic<Rational>& q, const Rational& t)
{
    const Rational s = Rational(1) - t;
    return Conic<Rational>{s * p.m11 + t * q.m11, s * p.m12 + t * q.m12, s * p.m13 + t * q.m13,
                           s * p.m22 + t * q.m22, s * p.m23 + t * q.m23, s * p.m33 + t * q.m33};
}

} // namespace detail

/// Entrywise linear interpolation from (conicA, conicB) to the sweep target
/// at steps + 1 samples. Failing samples carry the error code instead of a
/// report; output order follows t.
inline SweepReport run_sweep(const Request& req)
{
    if (!req.sweepTo)
        throw Error(ErrorCode::ParseError, "sweep target missing");
    if (req.steps < 1)
        throw Error(ErrorCode::ParseError, "steps must be positive");
    const Conic<Rational> a0 = to_conic(req.conicA), b0 = to_conic(req.conicB);
    const Conic<Rational> a1 = to_conic(req.sweepTo->first), b1 = to_conic(req.sweepTo->second);

    auto sample = [&](int i) {
        SweepSample s;
        Rational t(i, req.steps);
        t.canonicalize();
        s.t = std::to_string(i) + "/" + std::to_string(req.steps);
        try {
            const Conic<Rational> a = detail::lerp(a0, a1, t), b = detail::lerp(b0, b1, t);
            if (a == Conic<Rational>{} || b == Conic<Rational>{})
                throw Error(ErrorCode::DegenerateInput, "all coefficients vanish");
            Report r = classify_pair(req, a, b);
            r.timingMicros = 0; // keeps sweep output reproducible
            s.report = std::move(r);
        } catch (const Error& e) {
            s.error = std::string(to_string(e.code()));
        }
        return s;
    };

    SweepReport out;
    out.samples.resize(static_cast<std::size_t>(req.steps) + 1);
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (int i = static_cast<int>(w); i <= req.steps; i += static_cast<int>(workers))
                out.samples[static_cast<std::size_t>(i)] = sample(i);
        }));
    for (auto& j : jobs)
        j.get();

    auto key = [](const SweepSample& s) { return s.report ? s.report->caseNumber : -1; };
    for (int i = 0; i < req.steps; ++i)
        if (key(out.samples[i]) != key(out.samples[i + 1]) || out.samples[i].error != out.samples[i + 1].error)
            out.changes.push_back({i, i + 1});
    return out;
}

// ---------------------------------------------------------------------------
// Output

inline nlohmann::json to_json(const Report& r)
{
    nlohmann::json trace = nlohmann::json::array();
    for (const SignEntry& e : r.signTrace)
        trace.push_back({{"name", e.name}, {"sign", std::string(1, sign_char(e.sign))}});
    nlohmann::json j{{"family", r.family},     {"arithmetic", r.arithmetic}, {"case", r.caseNumber},
                     {"name", r.caseName},     {"matched", r.matched},       {"trace", trace},
                     {"unresolved", r.unresolved}, {"timing_us", r.timingMicros}, {"curve", r.curve},
                     {"ellipse", r.ellipse}};
    j["oracle_case"] = r.oracleCase ? nlohmann::json(*r.oracleCase) : nlohmann::json(nullptr);
    j["coarse"] = r.coarse ? nlohmann::json(*r.coarse) : nlohmann::json(nullptr);
    return j;
}

inline Sign sign_from_char(const std::string& s)
{
    if (s == "+")
        return Sign::Positive;
    if (s == "-")
        return Sign::Negative;
    if (s == "0")
        return Sign::Zero;
    if (s == "?")
        return Sign::Unknown;
    throw Error(ErrorCode::ParseError, "bad sign '" + s + "'");
}

inline Report report_from_json(const nlohmann::json& j)
{
    try {
        Report r;
        r.family = j.at("family").get<std::string>();
        r.arithmetic = j.at("arithmetic").get<std::string>();
        r.caseNumber = j.at("case").get<int>();
        r.caseName = j.at("name").get<std::string>();
        r.matched = j.at("matched").get<std::vector<int>>();
        for (const auto& e : j.at("trace"))
            r.signTrace.push_back({e.at("name").get<std::string>(), sign_from_char(e.at("sign").get<std::string>())});
        r.unresolved = j.at("unresolved").get<std::vector<std::string>>();
        r.timingMicros = j.at("timing_us").get<std::int64_t>();
        r.curve = j.at("curve").get<Coefficients>();
        r.ellipse = j.at("ellipse").get<Coefficients>();
        if (!j.at("oracle_case").is_null())
            r.oracleCase = j.at("oracle_case").get<int>();
        if (!j.at("coarse").is_null())
            r.coarse = j.at("coarse").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline Report report_from_json(std::string_view line)
{
    try {
        return report_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline Report report_from_json(const std::string& line) { return report_from_json(std::string_view(line)); }

inline std::string format_text(const Report& r)
{
    std::ostringstream os;
    os << r.family << ": case " << r.caseNumber << " " << r.caseName << "\n  signs:";
    for (const SignEntry& e : r.signTrace)
        os << " " << e.name << (e.name.find('=') == std::string::npos ? std::string(1, sign_char(e.sign)) : "");
    os << "\n";
    if (r.oracleCase)
        os << "  root-pattern oracle: case " << *r.oracleCase << (*r.oracleCase == r.caseNumber ? " (agrees)" : " (DISAGREES)")
           << "\n";
    if (r.coarse)
        os << "  geometric check: " << *r.coarse << "\n";
    os << "  time: " << r.timingMicros << " us\n";
    return os.str();
}

inline std::vector<std::string> format_sweep_json(const SweepReport& s)
{
    std::vector<std::string> lines;
    for (const SweepSample& x : s.samples) {
        nlohmann::json j{{"t", x.t}};
        if (x.report)
            j["report"] = to_json(*x.report);
        else
            j["error"] = *x.error;
        lines.push_back(j.dump());
    }
    for (auto [i, k] : s.changes)
        lines.push_back(nlohmann::json{{"change", {s.samples[i].t, s.samples[k].t}}}.dump());
    return lines;
}

inline std::string format_sweep_text(const SweepReport& s)
{
    std::ostringstream os;
    auto label = [](const SweepSample& x) {
        return x.report ? std::to_string(x.report->caseNumber) + " " + x.report->caseName : "! " + *x.error;
    };
    for (const SweepSample& x : s.samples)
        os << "t=" << x.t << "  " << label(x) << "\n";
    for (auto [i, k] : s.changes)
        os << "change in [" << s.samples[i].t << ", " << s.samples[k].t << "]: " << label(s.samples[i]) << " -> "
           << label(s.samples[k]) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// SVG

struct Box {
    double x0, y0, x1, y1;
};

namespace detail {

using Polyline = std::vector<std::array<double, 2>>;

// Principal frame of a central conic: centre, axes and the constant term
// after translation.
struct Frame {
    double cx, cy;
    Eigen2 eig;
    double f0;
};

inline Frame central_frame(const Conic<double>& c)
{
    const double d = c.m11 * c.m22 - c.m12 * c.m12;
    const double cx = (-c.m13 * c.m22 + c.m23 * c.m12) / d;
    const double cy = (-c.m23 * c.m11 + c.m13 * c.m12) / d;
    return {cx, cy, eigen_2x2(c.m11, c.m12, c.m22), c.m13 * cx + c.m23 * cy + c.m33};
}

inline std::array<double, 2> from_frame(const Frame& f, double u, double v)
{
    const auto& r = f.eig.rotation;
    return {f.cx + r[0][0] * u + r[0][1] * v, f.cy + r[1][0] * u + r[1][1] * v};
}

inline std::vector<Polyline> sample_curve(const Conic<double>& c, ConicClass type, double reach)
{
    constexpr int n = 720;
    std::vector<Polyline> out;
    if (type == ConicClass::RealEllipse) {
        const Frame f = central_frame(c);
        const double su = std::sqrt(-f.f0 / f.eig.b0), sv = std::sqrt(-f.f0 / f.eig.b2);
        Polyline p;
        for (int i = 0; i <= n; ++i) {
            const double t = 2 * std::numbers::pi * i / n;
            p.push_back(from_frame(f, su * std::cos(t), sv * std::sin(t)));
        }
        out.push_back(std::move(p));
    } else if (type == ConicClass::Hyperbola) {
        const Frame f = central_frame(c);
        // b0 u^2 + b2 v^2 = -f0 with b0 > 0 > b2
        const bool along_u = -f.f0 / f.eig.b0 > 0;
        const double s1 = std::sqrt(std::fabs(f.f0 / (along_u ? f.eig.b0 : f.eig.b2)));
        const double s2 = std::sqrt(std::fabs(f.f0 / (along_u ? f.eig.b2 : f.eig.b0)));
        const double tmax = std::asinh(reach / std::min(s1, s2));
        for (int branch : {-1, 1}) {
            Polyline p;
            for (int i = 0; i <= n; ++i) {
                const double t = -tmax + 2 * tmax * i / n;
                const double a = branch * s1 * std::cosh(t), b = s2 * std::sinh(t);
                p.push_back(along_u ? from_frame(f, a, b) : from_frame(f, b, a));
            }
            out.push_back(std::move(p));
        }
    } else if (type == ConicClass::Parabola) {
        // rotate so the quadratic part is lambda u^2
        const Eigen2 e = eigen_2x2(c.m11, c.m12, c.m22);
        const bool first = std::fabs(e.b0) > std::fabs(e.b2);
        const double lambda = first ? e.b0 : e.b2;
        const auto& r = e.rotation;
        const double ux = first ? r[0][0] : r[0][1], uy = first ? r[1][0] : r[1][1];
        const double vx = -uy, vy = ux;
        const double gu = c.m13 * ux + c.m23 * uy, gv = c.m13 * vx + c.m23 * vy;
        const double u0 = -gu / lambda;
        const double half = reach + std::fabs(u0);
        Polyline p;
        for (int i = 0; i <= n; ++i) {
            const double u = u0 - half + 2 * half * i / n;
            const double v = -(lambda * u * u + 2 * gu * u + c.m33) / (2 * gv);
            p.push_back({u * ux + v * vx, u * uy + v * vy});
        }
        out.push_back(std::move(p));
    }
    return out;
}

inline Box ellipse_box(const Conic<double>& e, double factor)
{
    const Frame f = central_frame(e);
    const double d = e.m11 * e.m22 - e.m12 * e.m12;
    const double hx = std::sqrt(-f.f0 * e.m22 / d), hy = std::sqrt(-f.f0 * e.m11 / d);
    return {f.cx - factor * hx, f.cy - factor * hy, f.cx + factor * hx, f.cy + factor * hy};
}

inline std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '<')
            out += "&lt;";
        else if (ch == '>')
            out += "&gt;";
        else if (ch == '&')
            out += "&amp;";
        else
            out += ch;
    }
    return out;
}

} // namespace detail

/// SVG of the pair with the case label; the view is the ellipse's bounding
/// box scaled 3x about its centre (widened to a square).
inline std::string svg_document(const Conic<Rational>& curve, const Conic<Rational>& ellipse, const Report& r)
{
    const auto to_d = [](const Rational& x) { return x.get_d(); };
    const Conic<double> c = convert<double>(curve, to_d), e = convert<double>(ellipse, to_d);
    Box b = detail::ellipse_box(e, 3.0);
    const double side = std::max(b.x1 - b.x0, b.y1 - b.y0);
    const double mx = (b.x0 + b.x1) / 2, my = (b.y0 + b.y1) / 2;
    b = {mx - side / 2, my - side / 2, mx + side / 2, my + side / 2};
    constexpr double px = 600;
    const double scale = px / side;
    auto X = [&](double x) { return (x - b.x0) * scale; };
    auto Y = [&](double y) { return (b.y1 - y) * scale; };

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px + 40
       << "\" viewBox=\"0 0 " << px << " " << px + 40 << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto draw = [&](const Conic<double>& k, ConicClass type, const char* colour) {
        for (const auto& line : detail::sample_curve(k, type, 2 * side)) {
            // split where the curve leaves a margin around the view
            std::string path;
            bool pen = false;
            for (const auto& p : line) {
                const bool in = p[0] > b.x0 - side && p[0] < b.x1 + side && p[1] > b.y0 - side && p[1] < b.y1 + side;
                if (!in) {
                    pen = false;
                    continue;
                }
                std::ostringstream seg;
                seg.precision(6);
                seg << (pen ? " L" : " M") << X(p[0]) << " " << Y(p[1]);
                path += seg.str();
                pen = true;
            }
            if (!path.empty())
                os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        }
    };
    os << "<svg x=\"0\" y=\"0\" width=\"" << px << "\" height=\"" << px << "\" overflow=\"hidden\">\n";
    draw(c, classify_type(curve), "#1f77b4");
    draw(e, ConicClass::RealEllipse, "#d62728");
    os << "</svg>\n";
    os << "<text x=\"10\" y=\"" << px + 28 << "\" font-family=\"sans-serif\" font-size=\"18\">"
       << detail::escape(std::to_string(r.caseNumber) + ": " + r.caseName) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

inline void render_svg(const Conic<Rational>& curve, const Conic<Rational>& ellipse, const Report& r,
                       const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out << svg_document(curve, ellipse, r);
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path);
}

} // namespace conicpos::cli

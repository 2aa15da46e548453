#pragma once

// Command-line layer: a JobSpec describes one invocation (from flags or a
// JSON file), run() dispatches it and writes deterministic text or JSON.
//
// Exit codes: 0 success / identity holds, 1 input error, 2 a verification
// command found a violation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bzt/analysis.hpp"
#include "bzt/bezout.hpp"
#include "bzt/instances.hpp"
#include "bzt/matrix.hpp"
#include "bzt/newton.hpp"
#include "bzt/polynomial.hpp"
#include "bzt/sturm.hpp"

namespace bzt::cli {

using json = nlohmann::ordered_json;

// Input problems carry the offending field in the message and map to exit 1.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Exactly one of coefficient form (ascending, constant term first) or root
// form (leading coefficient plus root list).
struct PolySpec {
    std::optional<std::vector<Rational>> coeffs;
    std::optional<Rational> leading;
    std::optional<std::vector<Rational>> roots;

    bool present() const { return coeffs.has_value() || roots.has_value(); }
    bool is_root_form() const { return roots.has_value(); }

    void check_exclusive(const std::string& field) const {
        if (coeffs.has_value() && (roots.has_value() || leading.has_value()))
            throw InputError(field + ": give either coefficients or leading+roots, not both");
    }

    Polynomial to_polynomial(const std::string& field) const {
        if (coeffs.has_value()) return Polynomial(*coeffs);
        if (roots.has_value()) return expand(to_root_form(field));
        throw InputError(field + ": polynomial is required");
    }

    RootForm to_root_form(const std::string& field) const {
        if (!roots.has_value()) throw InputError(field + ": root form (leading + roots) is required");
        return RootForm{leading.value_or(Rational(1)), *roots};
    }
};

struct Options {
    std::string format = "text";
    Rational width = default_isolation_width();
    std::uint64_t seed = 0;
    std::string family;
    int n = 4;
    int count = 20;
    int size = 0;  // 0 = all sizes
    bool approx = false;
};

struct JobSpec {
    std::string command;
    PolySpec p;
    PolySpec q;
    std::optional<NodeSequence> nodes;
    Options options;
};

// ---------------------------------------------------------------------------
// parsing helpers

inline Rational parse_rational_field(const std::string& text, const std::string& field) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(field + ": " + e.what());
    }
}

inline std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    int index = 0;
    while (std::getline(in, item, ',')) {
        std::size_t first = item.find_first_not_of(" \t");
        std::size_t last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw InputError(field + "[" + std::to_string(index) + "]: empty entry");
        out.push_back(parse_rational_field(item.substr(first, last - first + 1),
                                           field + "[" + std::to_string(index) + "]"));
        ++index;
    }
    if (out.empty()) throw InputError(field + ": empty list");
    return out;
}

inline Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_string()) return parse_rational_field(j.get<std::string>(), field);
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    throw InputError(field + ": expected a rational string");
}

inline std::vector<Rational> rational_list_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw InputError(field + ": expected a nonempty array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline PolySpec polyspec_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) throw InputError(field + ": expected an object");
    PolySpec spec;
    if (j.contains("coeffs")) spec.coeffs = rational_list_from_json(j.at("coeffs"), field + ".coeffs");
    if (j.contains("roots")) spec.roots = rational_list_from_json(j.at("roots"), field + ".roots");
    if (j.contains("leading")) spec.leading = rational_from_json(j.at("leading"), field + ".leading");
    spec.check_exclusive(field);
    if (!spec.present()) throw InputError(field + ": needs coeffs or roots");
    return spec;
}

inline JobSpec job_from_json(const json& j) {
    if (!j.is_object()) throw InputError("input: expected a JSON object");
    if (!j.contains("command") || !j.at("command").is_string()) throw InputError("command: required string");
    JobSpec spec;
    spec.command = j.at("command").get<std::string>();
    if (j.contains("P")) spec.p = polyspec_from_json(j.at("P"), "P");
    if (j.contains("Q")) spec.q = polyspec_from_json(j.at("Q"), "Q");
    if (j.contains("nodes")) spec.nodes = rational_list_from_json(j.at("nodes"), "nodes");
    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) throw InputError("options: expected an object");
        if (o.contains("format")) spec.options.format = o.at("format").get<std::string>();
        if (o.contains("width")) spec.options.width = rational_from_json(o.at("width"), "options.width");
        if (o.contains("seed")) {
            if (!o.at("seed").is_number_unsigned() && !o.at("seed").is_number_integer())
                throw InputError("options.seed: expected an unsigned integer");
            spec.options.seed = o.at("seed").get<std::uint64_t>();
        }
        if (o.contains("family")) spec.options.family = o.at("family").get<std::string>();
        if (o.contains("n")) spec.options.n = o.at("n").get<int>();
        if (o.contains("count")) spec.options.count = o.at("count").get<int>();
        if (o.contains("size")) spec.options.size = o.at("size").get<int>();
        if (o.contains("approx")) spec.options.approx = o.at("approx").get<bool>();
    }
    return spec;
}

// ---------------------------------------------------------------------------
// output helpers

inline json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json minors_to_json(const MinorSequence& seq) {
    json arr = json::array();
    for (const Rational& v : seq.values) arr.push_back(to_string(v));
    return arr;
}

inline json coeffs_to_json(const Polynomial& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline json intervals_to_json(const std::vector<Interval>& ivs) {
    json arr = json::array();
    for (const Interval& iv : ivs) arr.push_back(json::array({to_string(iv.lo), to_string(iv.hi)}));
    return arr;
}

inline json checks_to_json(const std::vector<MinorCheck>& checks) {
    json arr = json::array();
    for (const MinorCheck& c : checks)
        arr.push_back(json{{"size", c.size}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"equal", c.equal}});
    return arr;
}

namespace detail {

inline std::string approx_suffix(const Rational& v, bool enabled) {
    if (!enabled) return "";
    std::ostringstream os;
    os << " (~" << to_double(v) << ")";
    return os.str();
}

inline void print_matrix(std::ostream& out, const RationalMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        out << "  [";
        for (int j = 0; j < m.size(); ++j) out << (j ? ", " : " ") << to_string(m.at(i, j));
        out << " ]\n";
    }
}

inline std::string join_minors(const MinorSequence& seq, bool approx) {
    std::string out;
    for (int s = 1; s <= seq.size(); ++s) {
        if (s > 1) out += ", ";
        out += to_string(seq.at_size(s)) + approx_suffix(seq.at_size(s), approx);
    }
    return out;
}

inline std::string join_list(const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// command handlers

namespace detail {

struct CommandIO {
    const JobSpec& spec;
    std::ostream& out;
    json result;
    bool as_json;

    explicit CommandIO(const JobSpec& s, std::ostream& o)
        : spec(s), out(o), result(json::object()), as_json(s.options.format == "json") {
        result["command"] = s.command;
    }

    void finish() {
        if (as_json) out << result.dump(2) << "\n";
    }
};

inline const NodeSequence& require_nodes(const JobSpec& spec) {
    if (!spec.nodes.has_value()) throw InputError("nodes: required for this command");
    return *spec.nodes;
}

inline int cmd_bezout(CommandIO& io) {
    BezoutInput in(io.spec.p.to_polynomial("P"), io.spec.q.to_polynomial("Q"));
    RationalMatrix b = bezout_via_product(in);
    io.result["matrices"] = json{{"B", matrix_to_json(b)}};
    if (!io.as_json) {
        io.out << "B(P,Q) =\n";
        print_matrix(io.out, b);
    }
    io.finish();
    return 0;
}

inline int cmd_delta(CommandIO& io) {
    const NodeSequence& nodes = require_nodes(io.spec);
    DeltaMatrix delta = delta_matrix(io.spec.q.to_polynomial("Q"), nodes);
    io.result["matrices"] = json{{"Delta", matrix_to_json(delta.matrix)}};
    if (!io.as_json) {
        io.out << "Delta(Q) at nodes (" << join_list(nodes) << ") =\n";
        print_matrix(io.out, delta.matrix);
    }
    io.finish();
    return 0;
}

inline int cmd_minors(CommandIO& io) {
    Polynomial q = io.spec.q.to_polynomial("Q");
    int violations = 0;
    if (io.spec.p.is_root_form()) {
        RootForm rf = io.spec.p.to_root_form("P");
        BezoutInput in(expand(rf), q);
        RationalMatrix b = bezout_via_product(in);
        DeltaMatrix delta = delta_matrix(q, rf.roots);
        MinorSequence bm = trailing_minors(b);
        MinorSequence dm = trailing_minors(delta.matrix);
        std::vector<MinorCheck> checks = minor_identity_checks(rf, q);
        for (const MinorCheck& c : checks)
            if (!c.equal) ++violations;
        SignPattern pattern = classify_pattern(bm);
        io.result["matrices"] = json{{"B", matrix_to_json(b)}, {"Delta", matrix_to_json(delta.matrix)}};
        io.result["minors"] = minors_to_json(bm);
        io.result["delta_minors"] = minors_to_json(dm);
        io.result["checks"] = checks_to_json(checks);
        io.result["pattern"] = to_string(pattern.classification);
        if (!io.as_json) {
            io.out << "B(P,Q) =\n";
            print_matrix(io.out, b);
            io.out << "Delta(Q) at nodes (" << join_list(rf.roots) << ") =\n";
            print_matrix(io.out, delta.matrix);
            io.out << "trailing minors of B:     " << join_minors(bm, io.spec.options.approx) << "\n";
            io.out << "trailing minors of Delta: " << join_minors(dm, io.spec.options.approx) << "\n";
            for (const MinorCheck& c : checks)
                io.out << "identity size " << c.size << ": lhs " << to_string(c.lhs) << ", rhs " << to_string(c.rhs)
                       << (c.equal ? ", ok" : ", VIOLATION") << "\n";
            io.out << "pattern: " << to_string(pattern.classification) << "\n";
        }
    } else {
        BezoutInput in(io.spec.p.to_polynomial("P"), q);
        RationalMatrix b = bezout_via_product(in);
        MinorSequence bm = trailing_minors(b);
        SignPattern pattern = classify_pattern(bm);
        io.result["matrices"] = json{{"B", matrix_to_json(b)}};
        io.result["minors"] = minors_to_json(bm);
        io.result["pattern"] = to_string(pattern.classification);
        if (!io.as_json) {
            io.out << "B(P,Q) =\n";
            print_matrix(io.out, b);
            io.out << "trailing minors of B: " << join_minors(bm, io.spec.options.approx) << "\n";
            io.out << "pattern: " << to_string(pattern.classification) << "\n";
        }
    }
    io.finish();
    return violations == 0 ? 0 : 2;
}

inline int cmd_interp(CommandIO& io) {
    const NodeSequence& nodes = require_nodes(io.spec);
    Polynomial interp = newton_interp(io.spec.q.to_polynomial("Q"), nodes);
    io.result["interpolant"] = coeffs_to_json(interp);
    if (!io.as_json) {
        io.out << "interpolant: " << to_string(interp) << "\n";
        io.out << "coefficients (ascending): " << join_list(interp.coeffs()) << "\n";
    }
    io.finish();
    return 0;
}

inline int cmd_theorem1(CommandIO& io) {
    RootForm rf = io.spec.p.to_root_form("P");
    Polynomial q = io.spec.q.to_polynomial("Q");
    MinorSequence direct = trailing_minors(bezout_via_product(BezoutInput(expand(rf), q)));
    int n = static_cast<int>(rf.roots.size());
    int lo = 1, hi = n;
    if (io.spec.options.size != 0) {
        if (io.spec.options.size < 1 || io.spec.options.size > n)
            throw InputError("size: must lie in 1.." + std::to_string(n));
        lo = hi = io.spec.options.size;
    }
    std::vector<MinorCheck> checks;
    for (int s = lo; s <= hi; ++s) {
        MinorCheck c;
        c.size = s;
        c.lhs = direct.at_size(s);
        c.rhs = minor_from_simple_roots(rf, q, s);
        c.equal = (c.lhs == c.rhs);
        checks.push_back(std::move(c));
    }
    int violations = 0;
    for (const MinorCheck& c : checks)
        if (!c.equal) ++violations;
    io.result["checks"] = checks_to_json(checks);
    if (!io.as_json)
        for (const MinorCheck& c : checks)
            io.out << "size " << c.size << ": direct " << to_string(c.lhs) << ", closed-form " << to_string(c.rhs)
                   << (c.equal ? ", ok" : ", VIOLATION") << "\n";
    io.finish();
    return violations == 0 ? 0 : 2;
}

inline int cmd_verify(CommandIO& io) {
    const Options& opt = io.spec.options;
    if (opt.family.empty()) throw InputError("family: required (distinct-roots, shared-roots, multiple-roots)");
    if (opt.n < 1) throw InputError("n: must be positive");
    if (opt.count < 1) throw InputError("count: must be positive");
    std::function<PQInstance(Rng&, int)> make;
    if (opt.family == "distinct-roots")
        make = [](Rng& rng, int n) { return distinct_roots_instance(rng, n); };
    else if (opt.family == "shared-roots")
        make = [](Rng& rng, int n) { return shared_roots_instance(rng, n); };
    else if (opt.family == "multiple-roots")
        make = [](Rng& rng, int n) { return multiple_roots_instance(rng, n); };
    else
        throw InputError("family: unknown family '" + opt.family + "'");
    if (opt.family != "distinct-roots" && opt.n < 2) throw InputError("n: this family needs n >= 2");

    Rng rng(opt.seed);
    json instances = json::array();
    int failures = 0;
    for (int i = 0; i < opt.count; ++i) {
        PQInstance inst = make(rng, opt.n);
        bool ok = true;
        for (const MinorCheck& c : minor_identity_checks(inst.p, inst.q))
            ok = ok && c.equal;
        if (!ok) ++failures;
        instances.push_back(json{{"index", i}, {"equal", ok}});
        if (!io.as_json) io.out << "instance " << i << ": " << (ok ? "ok" : "VIOLATION") << "\n";
    }
    io.result["family"] = opt.family;
    io.result["n"] = opt.n;
    io.result["count"] = opt.count;
    io.result["seed"] = opt.seed;
    io.result["instances"] = std::move(instances);
    io.result["failures"] = failures;
    if (!io.as_json) io.out << "failures: " << failures << "\n";
    io.finish();
    return failures == 0 ? 0 : 2;
}

inline int cmd_interlace(CommandIO& io) {
    const NodeSequence& nodes = require_nodes(io.spec);
    InterlaceReport report = interlace_verdict(io.spec.q.to_polynomial("Q"), nodes, io.spec.options.width);
    io.result["minors"] = minors_to_json(report.pattern.minors);
    io.result["pattern"] = to_string(report.pattern.classification);
    io.result["verdict"] = to_string(report.verdict);
    io.result["interpolant"] = coeffs_to_json(report.interpolant);
    io.result["isolated_roots"] = intervals_to_json(report.isolated_roots);
    io.result["sturm_confirmed"] = report.sturm_confirmed;
    if (!io.as_json) {
        io.out << "trailing minors of Delta: " << join_minors(report.pattern.minors, io.spec.options.approx) << "\n";
        io.out << "pattern: " << to_string(report.pattern.classification) << "\n";
        io.out << "verdict: " << to_string(report.verdict) << "\n";
        io.out << "interpolant: " << to_string(report.interpolant) << "\n";
        for (const Interval& iv : report.isolated_roots)
            io.out << "root in (" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]"
                   << approx_suffix((iv.lo + iv.hi) / 2, io.spec.options.approx) << "\n";
        io.out << "sturm confirmed: " << (report.sturm_confirmed ? "yes" : "no") << "\n";
    }
    io.finish();
    bool claimed_unconfirmed = report.verdict == Verdict::RealDistinctInterlacing && !report.sturm_confirmed;
    return claimed_unconfirmed ? 2 : 0;
}

inline int cmd_defect(CommandIO& io) {
    DefectReport r = defect_report(io.spec.p.to_polynomial("P"), io.spec.q.to_polynomial("Q"));
    bool equal = r.defect == r.gcd_degree;
    io.result["defect"] = r.defect;
    io.result["gcd_degree"] = r.gcd_degree;
    io.result["equal"] = equal;
    if (!io.as_json)
        io.out << "defect " << r.defect << ", gcd degree " << r.gcd_degree << (equal ? ", ok" : ", VIOLATION") << "\n";
    io.finish();
    return equal ? 0 : 2;
}

inline int cmd_sturm(CommandIO& io) {
    Polynomial p = io.spec.p.to_polynomial("P");
    if (p.is_zero()) throw InputError("P: must be nonzero");
    Polynomial squarefree = p;
    if (p.degree() >= 1) {
        Polynomial g = gcd(p, derivative(p));
        if (g.degree() > 0) squarefree = divmod(p, g).first;
    }
    int count = 0;
    if (squarefree.degree() >= 1) {
        SturmChain chain = sturm_chain(squarefree);
        Rational bound = cauchy_root_bound(squarefree);
        count = count_real_roots(chain, -bound, bound);
    }
    std::vector<Interval> isolated = isolate_roots(squarefree, io.spec.options.width);
    io.result["count"] = count;
    io.result["isolated_roots"] = intervals_to_json(isolated);
    if (!io.as_json) {
        io.out << "distinct real roots: " << count << "\n";
        for (const Interval& iv : isolated)
            io.out << "root in (" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]"
                   << approx_suffix((iv.lo + iv.hi) / 2, io.spec.options.approx) << "\n";
    }
    io.finish();
    return 0;
}

}  // namespace detail

inline int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.options.format != "text" && spec.options.format != "json")
            throw InputError("format: must be 'text' or 'json'");
        detail::CommandIO io(spec, out);
        if (spec.command == "bezout") return detail::cmd_bezout(io);
        if (spec.command == "delta") return detail::cmd_delta(io);
        if (spec.command == "minors") return detail::cmd_minors(io);
        if (spec.command == "interp") return detail::cmd_interp(io);
        if (spec.command == "theorem1") return detail::cmd_theorem1(io);
        if (spec.command == "verify") return detail::cmd_verify(io);
        if (spec.command == "interlace") return detail::cmd_interlace(io);
        if (spec.command == "defect") return detail::cmd_defect(io);
        if (spec.command == "sturm") return detail::cmd_sturm(io);
        throw InputError("command: unknown command '" + spec.command + "'");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

// ---------------------------------------------------------------------------
// flag parsing

namespace detail {

struct RawArgs {
    std::string p_coeffs, p_roots, p_lead;
    std::string q_coeffs, q_roots, q_lead;
    std::string nodes;
    std::string format = "text";
    std::string width;
    std::string family;
    std::uint64_t seed = 0;
    int n = 4;
    int count = 20;
    int size = 0;
    bool approx = false;
};

inline void fill_polyspec(PolySpec& spec, const std::string& coeffs, const std::string& roots,
                          const std::string& lead, const std::string& field) {
    if (!coeffs.empty()) spec.coeffs = parse_rational_list(coeffs, "--" + field + "-coeffs");
    if (!roots.empty()) spec.roots = parse_rational_list(roots, "--" + field + "-roots");
    if (!lead.empty()) spec.leading = parse_rational_field(lead, "--" + field + "-lead");
    spec.check_exclusive("--" + field + "-coeffs/--" + field + "-roots");
}

inline JobSpec raw_to_job(const std::string& command, const RawArgs& raw) {
    JobSpec spec;
    spec.command = command;
    fill_polyspec(spec.p, raw.p_coeffs, raw.p_roots, raw.p_lead, "p");
    fill_polyspec(spec.q, raw.q_coeffs, raw.q_roots, raw.q_lead, "q");
    if (!raw.nodes.empty()) spec.nodes = parse_rational_list(raw.nodes, "--nodes");
    spec.options.format = raw.format;
    if (!raw.width.empty()) {
        spec.options.width = parse_rational_field(raw.width, "--width");
        if (spec.options.width <= 0) throw InputError("--width: must be positive");
    }
    spec.options.seed = raw.seed;
    spec.options.family = raw.family;
    spec.options.n = raw.n;
    spec.options.count = raw.count;
    spec.options.size = raw.size;
    spec.options.approx = raw.approx;
    return spec;
}

}  // namespace detail

// Parses argv-style arguments (program name excluded). Returns nullopt when
// help was requested and printed. Throws InputError on bad input.
inline std::optional<JobSpec> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact Bezout-matrix / divided-difference minor toolkit", "bzt"};
    app.require_subcommand(0, 1);
    std::string input_file;
    app.add_option("--input", input_file, "JSON file holding a full job description");

    detail::RawArgs raw;
    const auto add_p = [&raw](CLI::App* cmd) {
        cmd->add_option("--p-coeffs", raw.p_coeffs, "P coefficients, ascending, comma separated");
        cmd->add_option("--p-roots", raw.p_roots, "P roots, comma separated");
        cmd->add_option("--p-lead", raw.p_lead, "P leading coefficient (root form, default 1)");
    };
    const auto add_q = [&raw](CLI::App* cmd) {
        cmd->add_option("--q-coeffs", raw.q_coeffs, "Q coefficients, ascending, comma separated");
        cmd->add_option("--q-roots", raw.q_roots, "Q roots, comma separated");
        cmd->add_option("--q-lead", raw.q_lead, "Q leading coefficient (root form, default 1)");
    };
    const auto add_nodes = [&raw](CLI::App* cmd) {
        cmd->add_option("--nodes", raw.nodes, "interpolation nodes, comma separated");
    };
    const auto add_common = [&raw](CLI::App* cmd) {
        cmd->add_option("--format", raw.format, "output format: text or json");
        cmd->add_flag("--approx", raw.approx, "add decimal approximations to text output");
    };
    const auto add_width = [&raw](CLI::App* cmd) {
        cmd->add_option("--width", raw.width, "isolation interval width (rational, default 1/4294967296)");
    };

    CLI::App* bezout = app.add_subcommand("bezout", "Bezout matrix B(P,Q)");
    add_p(bezout), add_q(bezout), add_common(bezout);
    CLI::App* delta = app.add_subcommand("delta", "divided-difference matrix Delta(Q) at nodes");
    add_q(delta), add_nodes(delta), add_common(delta);
    CLI::App* minors = app.add_subcommand("minors", "trailing minors of B and Delta with identity check");
    add_p(minors), add_q(minors), add_common(minors);
    CLI::App* interp = app.add_subcommand("interp", "Newton-Hermite interpolation polynomial");
    add_q(interp), add_nodes(interp), add_common(interp);
    CLI::App* theorem1 = app.add_subcommand("theorem1", "closed-form trailing minors from simple roots of P");
    add_p(theorem1), add_q(theorem1), add_common(theorem1);
    theorem1->add_option("--size", raw.size, "single minor size (default: all sizes)");
    CLI::App* verify = app.add_subcommand("verify", "seeded random minor-identity verification");
    add_common(verify);
    verify->add_option("--family", raw.family, "distinct-roots, shared-roots, or multiple-roots");
    verify->add_option("--n", raw.n, "degree of P per instance");
    verify->add_option("--count", raw.count, "number of instances");
    verify->add_option("--seed", raw.seed, "random seed (decimal u64)");
    CLI::App* interlace = app.add_subcommand("interlace", "interlacing verdict with Sturm confirmation");
    add_q(interlace), add_nodes(interlace), add_common(interlace), add_width(interlace);
    CLI::App* defect = app.add_subcommand("defect", "Bezoutiant defect vs gcd degree");
    add_p(defect), add_q(defect), add_common(defect);
    CLI::App* sturm = app.add_subcommand("sturm", "real-root count and isolation intervals");
    add_p(sturm), add_common(sturm), add_width(sturm);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InputError(std::string("arguments: ") + e.what());
    }

    if (!input_file.empty()) {
        if (!app.get_subcommands().empty()) throw InputError("--input: cannot be combined with a subcommand");
        std::ifstream in(input_file);
        if (!in) throw InputError("--input: cannot open '" + input_file + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("--input: invalid JSON: ") + e.what());
        }
        return job_from_json(j);
    }

    auto triggered = app.get_subcommands();
    if (triggered.empty()) throw InputError("command: expected a subcommand or --input (see --help)");
    return detail::raw_to_job(triggered.front()->get_name(), raw);
}

}  // namespace bzt::cli

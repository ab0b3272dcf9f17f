// mdsconv: construct and verify unit-memory MDS convolutional codes.
//
// Exit codes: 0 ok, 1 a guaranteed verdict is refuted or a fixture differs,
// 2 invalid parameters or input, 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mdsconv/pipeline.hpp"

using namespace mdsconv;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Globals {
    std::string format;
    unsigned jobs = 1;
    std::uint64_t seed = 0;  // accepted for interface stability; nothing here is randomized
};

struct FieldArgs {
    std::string modulus;
    std::string ext_modulus;
    std::optional<Elem> theta_ext;
};

struct CodeArgs {
    std::string family;
    unsigned q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    std::size_t tau = 0;
    FieldArgs field;
};

std::vector<unsigned> parse_list(const std::string& s, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidParams, std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

FieldSetup field_setup(const FieldArgs& a) {
    FieldSetup s;
    if (!a.modulus.empty()) s.modulus = parse_list(a.modulus, "modulus");
    if (!a.ext_modulus.empty()) {
        const auto c = parse_list(a.ext_modulus, "ext-modulus");
        require(c.size() == 2, ErrorCode::InvalidParams, "ext-modulus takes c0,c1 of t^2 + c1 t + c0");
        s.ext_modulus = std::array<Elem, 2>{c[0], c[1]};
    }
    s.theta_ext = a.theta_ext;
    return s;
}

Bundle build_from(const CodeArgs& a) {
    require(!a.family.empty(), ErrorCode::InvalidParams, "--family is required");
    require(a.q != 0, ErrorCode::InvalidParams, "--q is required");
    const FamilySpec spec = make_spec(parse_family(a.family), a.q, a.n, a.k, a.delta, a.tau);
    return build(spec, field_setup(a.field));
}

void add_code_options(CLI::App* cmd, CodeArgs& a) {
    cmd->add_option("--family", a.family, "sec3, sec4, sec5c1, sec5c2 or sec5p2");
    cmd->add_option("--q", a.q, "field order");
    cmd->add_option("--n", a.n, "length (sec3 only)");
    cmd->add_option("--k", a.k, "block-code dimension");
    cmd->add_option("--delta", a.delta, "split size");
    cmd->add_option("--tau", a.tau, "root range (sec5c2 only)");
    cmd->add_option("--modulus", a.field.modulus, "base modulus over F_p, ascending, e.g. 1,1,0,1");
    cmd->add_option("--ext-modulus", a.field.ext_modulus, "c0,c1 of the extension modulus t^2 + c1 t + c0");
    cmd->add_option("--theta-ext", a.field.theta_ext, "primitive element of F_{q^2}, encoded a + q b");
}

std::string render_modulus(const std::vector<unsigned>& m) {
    std::string out;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "+";
        const std::string c = m[i] == 1 && i > 0 ? "" : std::to_string(m[i]);
        out += c + (i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i));
    }
    return out;
}

int cmd_field(const Globals& g, unsigned p, unsigned m, const std::string& modulus, bool tables) {
    std::optional<std::vector<unsigned>> mod;
    if (!modulus.empty()) mod = parse_list(modulus, "modulus");
    const FieldPtr f = make_field(p, m, mod);
    const Elem q = f->q();
    if (g.format == "json") {
        Json out = field_json(*f);
        out["q"] = q;
        if (tables) {
            Json add = Json::array(), mul = Json::array();
            for (Elem a = 0; a < q; ++a) {
                Json ra = Json::array(), rm = Json::array();
                for (Elem b = 0; b < q; ++b) {
                    ra.push_back(f->add(a, b));
                    rm.push_back(f->mul(a, b));
                }
                add.push_back(ra);
                mul.push_back(rm);
            }
            out["add"] = add;
            out["mul"] = mul;
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "F_" << q << " = F_" << p << "[x]/(" << render_modulus(f->modulus()) << ")\n";
    std::cout << "modulus: " << render_modulus(f->modulus()) << "\n";
    std::cout << "theta: " << f->theta() << " (" << f->render(f->theta()) << ")\n";
    std::cout << "powers:";
    for (Elem i = 0; i + 1 < q || i == 0; ++i) std::cout << " " << f->theta_pow(i);
    std::cout << "\n";
    if (tables) {
        for (const char* op : {"+", "*"}) {
            std::cout << op << " table:\n";
            for (Elem a = 0; a < q; ++a) {
                for (Elem b = 0; b < q; ++b) std::cout << (b ? " " : "") << (*op == '+' ? f->add(a, b) : f->mul(a, b));
                std::cout << "\n";
            }
        }
    }
    return kOk;
}

int cmd_construct(const Globals& g, const CodeArgs& a) {
    const Bundle b = build_from(a);
    if (g.format == "json")
        std::cout << bundle_json(b).dump(2) << "\n";
    else
        std::cout << render_bundle(b);
    return kOk;
}

int verdict_exit(const ConvReport& r, const std::optional<ExpectedFlags>& e) {
    if (e && any_refuted(r, *e)) return kRefuted;
    const bool inconclusive = e ? any_inconclusive(r, *e)
                                : (r.mds == Verdict::Inconclusive || r.smds == Verdict::Inconclusive ||
                                   r.mdp == Verdict::Inconclusive);
    if (r.budget_exhausted && inconclusive) return kBudget;
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& input, const CodeArgs& a, const ClassifyOptions& co) {
    VerifyInput in;
    if (!input.empty()) {
        std::string text;
        if (input == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream file(input);
            require(file.good(), ErrorCode::ParseError, "cannot open " + input);
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::ParseError, e.what());
        }
        in = verify_input_from_json(doc);
    } else {
        const Bundle b = build_from(a);
        in.field = b.field;
        in.parity = b.parity;
        in.expected = b.expected;
        in.spec = b.spec;
    }
    const ConvReport r = classify(*in.field, in.parity, co);
    if (g.format == "text") {
        std::cout << render_report(r);
    } else {
        Json out = report_json(r);
        if (in.expected) out["expected"] = expected_json(*in.expected);
        std::cout << out.dump(2) << "\n";
    }
    return verdict_exit(r, in.expected);
}

int cmd_examples(const Globals& g, const std::vector<int>& ids, bool check, const ClassifyOptions& co) {
    std::vector<const ExampleFixture*> chosen;
    if (ids.empty())
        for (const auto& f : example_fixtures()) chosen.push_back(&f);
    else
        for (int id : ids) chosen.push_back(&example_fixture(id));

    bool all_ok = true;
    Json arr = Json::array();
    for (const ExampleFixture* fx : chosen) {
        const ExampleCheck c = check_example(*fx, co);
        all_ok = all_ok && c.ok();
        if (g.format == "json") {
            Json claims = Json::object();
            for (const auto& cl : c.claims)
                claims[cl.name] = Json{{"claimed", cl.claimed}, {"verdict", to_string(cl.verdict)}};
            arr.push_back(Json{{"id", c.id},
                               {"label", c.label},
                               {"parity_match", c.parity_match},
                               {"diff", c.diff},
                               {"dfree_expected", c.dfree_expected},
                               {"dfree", {c.report.dfree_lower, c.report.dfree_upper}},
                               {"block_split", {c.split.lower, c.split.upper}},
                               {"split_pinches", c.split_pinches},
                               {"cd_route_j", c.cd_route_j ? Json(*c.cd_route_j) : Json(nullptr)},
                               {"routes_agree", c.routes_agree},
                               {"claims", claims},
                               {"ok", c.ok()}});
            continue;
        }
        std::cout << "Example " << c.id << " " << c.label << ": parity " << (c.parity_match ? "matches" : "DIFFERS")
                  << ", dfree [" << c.report.dfree_lower << "," << c.report.dfree_upper << "] expected "
                  << c.dfree_expected << ", split [" << c.split.lower << "," << c.split.upper << "]";
        if (c.cd_route_j) std::cout << ", d_" << *c.cd_route_j << "^c = bound";
        for (const auto& cl : c.claims)
            if (cl.claimed) std::cout << ", " << cl.name << " " << to_string(cl.verdict);
        std::cout << (c.ok() ? "  ok" : "  MISMATCH") << "\n";
        for (const auto& d : c.diff) std::cout << "    " << d << "\n";
    }
    if (g.format == "json") std::cout << arr.dump(2) << "\n";
    return check && !all_ok ? kRefuted : kOk;
}

int cmd_sweep(const Globals& g, const std::string& qs, const std::string& families, const ClassifyOptions& co,
              const std::string& output, bool timing) {
    SweepOptions so;
    so.qs = parse_list(qs, "q");
    require(!so.qs.empty(), ErrorCode::InvalidParams, "--q needs at least one value");
    if (families == "all") {
        so.families = all_families();
    } else {
        std::stringstream ss(families);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) so.families.push_back(parse_family(item));
    }
    require(!so.families.empty(), ErrorCode::InvalidParams, "empty family list");
    so.classify = co;
    so.jobs = g.jobs;
    const auto rows = run_sweep(so);

    if (!output.empty()) {
        std::ofstream out(output);
        require(out.good(), ErrorCode::InvalidParams, "cannot write " + output);
        const bool json = output.size() >= 5 && output.substr(output.size() - 5) == ".json";
        out << (json ? sweep_json(rows, timing).dump(2) + "\n" : sweep_csv(rows, timing));
    }
    if (g.format == "json")
        std::cout << sweep_json(rows, timing).dump(2) << "\n";
    else
        std::cout << sweep_csv(rows, timing);

    bool refuted = false, inconclusive = false;
    for (const auto& r : rows) {
        refuted = refuted || any_refuted(r.report, r.expected);
        inconclusive = inconclusive || (r.report.budget_exhausted && any_inconclusive(r.report, r.expected));
    }
    if (refuted) return kRefuted;
    return inconclusive ? kBudget : kOk;
}

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SearchBudgetExceeded: return kBudget;
        case ErrorCode::PropertyViolation: return kRefuted;
        default: return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-memory MDS convolutional codes: construct, verify, reproduce, sweep"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized property runs");

    ClassifyOptions co;
    auto add_search = [&](CLI::App* cmd) {
        cmd->add_option("--jmax", co.jmax, "largest column-distance index computed up front");
        cmd->add_option("--budget", co.limits.budget, "column reductions per search");
    };

    unsigned fp = 0, fm = 0;
    std::string fmod;
    bool tables = false;
    auto* field = app.add_subcommand("field", "describe a prime-power field");
    field->add_option("--p", fp, "characteristic")->required();
    field->add_option("--m", fm, "extension degree")->required();
    field->add_option("--modulus", fmod, "modulus over F_p, ascending coefficients");
    field->add_flag("--tables", tables, "print addition and multiplication tables");

    CodeArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build a construction bundle");
    add_code_options(construct, construct_args);

    CodeArgs verify_args;
    std::string input;
    auto* verify = app.add_subcommand("verify", "classify a bundle");
    verify->add_option("--input", input, "bundle JSON file, or - for stdin");
    add_code_options(verify, verify_args);
    add_search(verify);

    std::vector<int> ids;
    bool check = false;
    auto* examples = app.add_subcommand("examples", "regenerate the worked F_8 examples");
    examples->add_option("--id", ids, "example ids (default all)")->delimiter(',');
    examples->add_flag("--check", check, "exit 1 on any mismatch");
    add_search(examples);

    std::string qs, families = "all", output;
    bool no_timing = false;
    auto* sweep = app.add_subcommand("sweep", "classify every tuple in the guarantee ranges");
    sweep->add_option("--q", qs, "field orders, comma separated")->required();
    sweep->add_option("--families", families, "comma separated families, or all");
    sweep->add_option("--output", output, "write CSV (or JSON for *.json) here");
    sweep->add_flag("--no-timing", no_timing, "write 0 for elapsed times");
    add_search(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    co.limits.jobs = g.jobs;

    try {
        if (*field) {
            if (g.format.empty()) g.format = "text";
            return cmd_field(g, fp, fm, fmod, tables);
        }
        if (*construct) {
            if (g.format.empty()) g.format = "text";
            return cmd_construct(g, construct_args);
        }
        if (*verify) {
            if (g.format.empty()) g.format = "json";
            return cmd_verify(g, input, verify_args, co);
        }
        if (*examples) {
            if (g.format.empty()) g.format = "text";
            return cmd_examples(g, ids, check, co);
        }
        if (*sweep) {
            if (g.format.empty()) g.format = "text";
            return cmd_sweep(g, qs, families, co, output, !no_timing);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return kInvalid;
}

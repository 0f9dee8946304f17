// intamp: exact spectral classification of endomorphism pullback actions.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "intamp/examples_corpus.hpp"
#include "intamp/json_io.hpp"

namespace {

using intamp::jsonio::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

struct Options {
    std::string input_path;
    std::string inline_json;
    std::string format{"json"};
    unsigned precision{64};
    std::string case_id;
};

void add_io_flags(CLI::App* cmd, Options& opt, bool needs_input) {
    auto* in = cmd->add_option("--input", opt.input_path, "Path to a JSON input file");
    auto* js = cmd->add_option("--json", opt.inline_json, "Inline JSON input");
    in->excludes(js);
    if (needs_input) {
        // exactly one source; checked after parse so the error lands on exit 2
    }
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("json");
    cmd->add_option("--precision", opt.precision, "Working precision in bits")
        ->check(CLI::Range(2u, 4096u))
        ->default_val(64u);
}

json load_input(const Options& opt) {
    if (opt.input_path.empty() == opt.inline_json.empty())
        throw intamp::InputError("supply exactly one of --input and --json");
    std::string text;
    if (!opt.input_path.empty()) {
        std::ifstream f(opt.input_path);
        if (!f) throw intamp::InputError("cannot open " + opt.input_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        text = opt.inline_json;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw intamp::InputError(std::string("malformed JSON: ") + e.what());
    }
}

void print_text(const json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object() || v.is_array())
                print_text(v, os, key);
            else
                os << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else if (j.is_array()) {
        long i = 0;
        for (const auto& v : j) print_text(v, os, prefix + "[" + std::to_string(i++) + "]");
    } else {
        os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const Options& opt) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        print_text(j, std::cout);
}

json run_classify(const json& in) {
    return intamp::jsonio::classification_to_json(
        intamp::classify(intamp::jsonio::endo_action_from_json(in)));
}

json run_build_ns(const json& in) {
    return intamp::jsonio::endo_action_to_json(
        intamp::ns_pullback(intamp::jsonio::cmendo_from_json(in)));
}

json run_compose(const json& in) {
    if (!in.is_object() || !in.contains("f") || !in.contains("g"))
        throw intamp::InputError("compose expects {\"f\": .., \"g\": ..}");
    auto f = intamp::jsonio::endo_action_from_json(in.at("f"));
    auto g = intamp::jsonio::endo_action_from_json(in.at("g"));
    return intamp::jsonio::composition_to_json(intamp::compose_min_power(f, g));
}

json run_cone_check(const json& in) {
    if (!in.is_object() || !in.contains("cone"))
        throw intamp::InputError("cone-check expects {\"cone\": .., \"point\"|\"phi\": ..}");
    intamp::PolyCone C = intamp::jsonio::cone_from_json(in.at("cone"));
    if (in.contains("point")) {
        auto v = intamp::jsonio::vector_from_json(in.at("point"));
        bool strict = in.value("strict", false);
        if (static_cast<long>(v.size()) != C.ambient_dim)
            throw intamp::InputError("point dimension mismatch");
        return intamp::jsonio::membership_to_json(intamp::cone_contains(C, v, strict));
    }
    if (in.contains("phi")) {
        auto phi = intamp::jsonio::endo_action_from_json(in.at("phi"));
        json out;
        out["invariant"] = intamp::is_invariant(phi.mat, C);
        if (out["invariant"].get<bool>())
            out["pf_lemma"] = intamp::jsonio::witness_to_json(intamp::verify_pf_lemma(phi.mat, C));
        return out;
    }
    throw intamp::InputError("cone-check needs a \"point\" or a \"phi\"");
}

json run_orbit_witness(const json& in) {
    if (!in.is_object() || !in.contains("phi") || !in.contains("v"))
        throw intamp::InputError("orbit-witness expects {\"phi\": .., \"v\": .., \"m_max\": ..}");
    auto phi = intamp::jsonio::endo_action_from_json(in.at("phi"));
    auto v = intamp::jsonio::vector_from_json(in.at("v"));
    long m_max = in.value("m_max", 64L);
    if (m_max <= 0) throw intamp::InputError("m_max must be positive");
    return intamp::jsonio::witness_to_json(intamp::orbit_cone_witness(phi.mat, v, m_max));
}

int run_examples(const Options& opt) {
    std::vector<std::string> ids = intamp::example_ids();
    if (!opt.case_id.empty()) {
        if (std::find(ids.begin(), ids.end(), opt.case_id) == ids.end()) {
            std::cerr << "unknown example id: " << opt.case_id << "\n";
            return kExitInput;
        }
        ids = {opt.case_id};
    }
    bool all_pass = true;
    json out = json::array();
    for (const std::string& id : ids) {
        intamp::ExampleReport rep = intamp::run_example(id);
        all_pass = all_pass && rep.all_pass();
        json c;
        c["id"] = rep.id;
        json as = json::array();
        for (const auto& a : rep.assertions) as.push_back({{"assertion", a.name}, {"pass", a.pass}});
        c["assertions"] = std::move(as);
        c["all_pass"] = rep.all_pass();
        if (opt.format == "text")
            for (const auto& a : rep.assertions)
                std::cout << rep.id << " | " << a.name << ": " << (a.pass ? "pass" : "FAIL") << "\n";
        out.push_back(std::move(c));
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral criteria for int-amplified / amplified / polarized endomorphisms"};
    app.require_subcommand(1);

    Options opt;
    auto* c_classify = app.add_subcommand("classify", "Spectral classification of a pullback action");
    auto* c_build = app.add_subcommand("build-ns", "Build the N^1 pullback action of a CM endomorphism");
    auto* c_compose = app.add_subcommand("compose", "Composition-power certificate search");
    auto* c_cone = app.add_subcommand("cone-check", "Cone membership / invariance / PF-lemma checks");
    auto* c_orbit = app.add_subcommand("orbit-witness", "Orbit-cone relative-interior witness search");
    auto* c_examples = app.add_subcommand("examples", "Run the bundled example corpus");
    for (CLI::App* c : {c_classify, c_build, c_compose, c_cone, c_orbit}) add_io_flags(c, opt, true);
    c_examples->add_option("--case", opt.case_id, "Run a single case (e.g. 9.4)");
    c_examples->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_examples->parsed()) return run_examples(opt);
        json in = load_input(opt);
        if (c_classify->parsed())
            emit(run_classify(in), opt);
        else if (c_build->parsed())
            emit(run_build_ns(in), opt);
        else if (c_compose->parsed())
            emit(run_compose(in), opt);
        else if (c_cone->parsed())
            emit(run_cone_check(in), opt);
        else if (c_orbit->parsed())
            emit(run_orbit_witness(in), opt);
        return kExitOk;
    } catch (const intamp::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const intamp::MathError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
}

// hessecheck: runs the verification suites and writes a JSON or markdown report.
//
//   hessecheck identities
//   hessecheck rank --pencil "x^2*y;x^2*z"
//   hessecheck configs --field fpw:11 --points quad.txt
//   hessecheck multidegree --variety h8 --seed 42 --out report.json
//   hessecheck report --format md --out report.md
//
// Exit status: 0 when no check fails, 1 when some check fails, 2 on a usage error.

#include <hessepencil/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Args {
    std::uint64_t seed = 1;
    std::string field;
    std::string pencil;
    std::string points;
    std::string out;
    std::string format = "json";
    std::string variety = "h8";
    int samples = 10;
    bool timings = false;
};

void add_common(CLI::App* sub, Args& a) {
    sub->add_option("--field", a.field, "q | fp:<p> | qw | fpw:<p>");
    sub->add_option("--seed", a.seed, "seed for the randomized checks");
    sub->add_option("--out", a.out, "write the report here instead of stdout");
    sub->add_option("--format", a.format, "json | md")->check(CLI::IsMember({"json", "md"}));
    sub->add_flag("--timings", a.timings, "include per-check runtimes (makes output time-dependent)");
}

int usage_error(const std::string& msg) {
    std::cerr << "hessecheck: " << msg << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Hesse pencils, the varieties H3 and N, and their multidegrees"};
    app.require_subcommand(1, 1);
    Args a;
    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> help{
        {"identities", "symbolic identities: the invariant R, its syzygies, Hessians, Hesse closure"},
        {"membership", "membership in H3 and N, and pencils through a fixed cubic"},
        {"rank", "Jacobian ranks at the orbit representatives (or at --pencil)"},
        {"orbits", "orbit dimensions of the catalog of pencils"},
        {"degenerations", "epsilon-families and their limits"},
        {"configs", "Hesse configurations through four general points"},
        {"triangles", "triangles through six general points"},
        {"multidegree", "multidegree of H3 or N from random samples"},
        {"decompose", "Schur decompositions of exterior powers"},
        {"report", "run every suite"},
    };
    for (const auto& name : hesse::suite_names()) {
        auto* sub = app.add_subcommand(name, help.at(name));
        add_common(sub, a);
        subs[name] = sub;
    }
    for (const char* n : {"membership", "rank"}) subs[n]->add_option("--pencil", a.pencil, "\"<f>;<g>\": two cubics in x,y,z or two quartics in x,y");
    for (const char* n : {"configs", "triangles"}) subs[n]->add_option("--points", a.points, "file with one point per line");
    subs["multidegree"]->add_option("--variety", a.variety, "h3 | h8")->check(CLI::IsMember({"h3", "h8"}));
    for (const char* n : {"multidegree", "report"}) subs[n]->add_option("--samples", a.samples, "seeds per randomized coefficient")->check(CLI::Range(1, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;

    hesse::SuiteOptions opt;
    opt.seed = a.seed;
    opt.variety = a.variety;
    opt.samples = a.samples;
    if (!a.pencil.empty()) opt.pencil = a.pencil;
    if (!a.points.empty()) opt.points = a.points;
    try {
        if (!a.field.empty()) opt.field = hesse::FieldSpec::parse(a.field);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }

    hesse::Report report;
    try {
        report = hesse::run_suite(command, opt);
    } catch (const hesse::InputError& e) {
        return usage_error(e.what());
    } catch (const hesse::FieldError& e) {
        return usage_error(e.what());
    } catch (const hesse::ParseError& e) {
        return usage_error(e.what());
    }

    std::string text = a.format == "md" ? hesse::to_markdown(report, a.timings) : hesse::to_json(report, a.timings).dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out);
        f << text;
        std::cout << command << ": " << report.count(hesse::Status::pass) << " pass, " << report.count(hesse::Status::fail)
                  << " fail, " << report.count(hesse::Status::assumed) << " assumed, " << report.count(hesse::Status::flagged)
                  << " flagged -> " << a.out << "\n";
    }
    return report.failed() ? 1 : 0;
}

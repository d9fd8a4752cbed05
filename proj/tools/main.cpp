#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steinitz/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

int emit(const steinitz::SuiteReport& rep, bool json) {
    std::cout << (json ? steinitz::render_json(rep) : steinitz::render_text(rep));
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steinitz classes of modules over imaginary quadratic rings: "
                 "class groups, involution lattices, CM pipelines"};
    app.require_subcommand(1);

    std::string dvalue = "10";
    bool json = false;

    auto* cg = app.add_subcommand("classgroup", "class group and splitting of 2");
    cg->add_option("--D", dvalue, "squarefree positive D for K = Q(sqrt(-D))")
        ->required();
    cg->add_flag("--json", json, "machine-readable report");

    std::string dataset_path, suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite on a dataset");
    verify->add_option("--dataset", dataset_path, "dataset file")->required();
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_flag("--json", json, "machine-readable report");

    unsigned count = 100, max_rank = 6;
    std::uint64_t seed = 1;
    auto* rnd = app.add_subcommand("random", "randomized property suite");
    rnd->add_option("--suite", suite, "suite name")->required();
    rnd->add_option("--count", count, "number of cases");
    rnd->add_option("--seed", seed, "RNG seed");
    rnd->add_option("--max-rank", max_rank, "rank ceiling for random lattices");
    rnd->add_flag("--json", json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (cg->parsed()) {
            steinitz::Int d;
            if (d.set_str(dvalue, 10) != 0)
                throw steinitz::ParseError("bad integer for --D: " + dvalue);
            steinitz::ClassGroupReport rep = steinitz::run_classgroup(d);
            std::cout << (json ? steinitz::render_json(rep) : steinitz::render_text(rep));
            code = rep.two_checks ? kExitOk : kExitVerifyFail;
        } else if (verify->parsed()) {
            steinitz::Dataset ds = steinitz::load_dataset(dataset_path);
            code = emit(steinitz::run_verify_suite(ds, suite, dataset_path), json);
        } else if (rnd->parsed()) {
            if (count < 1)
                throw steinitz::ParseError("--count must be at least 1");
            code = emit(steinitz::run_random_suite(suite, count, seed, max_rank), json);
        }
    } catch (const steinitz::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const steinitz::NotSquarefree& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed: " << dt << " ms\n"; // stderr keeps stdout reproducible
    return code;
}

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bbplan/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bbplan: black-box planning with focused macro-actions"};
    app.require_subcommand(1);

    std::string domain;

    // correlate
    bbplan::CorrelateConfig correlate;
    CLI::App* c = app.add_subcommand(
        "correlate", "Goal-count vs true distance correlation on Suitcase Lock");
    c->add_option("--domain", domain, "Domain (suitcase only)")->default_str("suitcase");
    c->add_option("--n", correlate.num_dials, "Number of dials N")->capture_default_str();
    c->add_option("--m", correlate.modulus, "Digits per dial M")->capture_default_str();
    c->add_option("--kbar-min", correlate.kbar_min, "Smallest mean effect size")
        ->capture_default_str();
    c->add_option("--kbar-max", correlate.kbar_max, "Largest mean effect size (0 = N-1)")
        ->capture_default_str();
    c->add_option("--seeds", correlate.seeds, "Locks per effect size")->capture_default_str();
    c->add_option("--seed", correlate.seed, "Base random seed")->capture_default_str();
    c->add_option("--out", correlate.out, "Output CSV path")->required();
    c->set_config("--config");

    // sweep
    bbplan::SweepConfig sweep;
    CLI::App* s = app.add_subcommand(
        "sweep", "Generated states vs effect size on Suitcase Lock");
    s->add_option("--domain", domain, "Domain (suitcase only)")->default_str("suitcase");
    s->add_option("--n", sweep.num_dials, "Number of dials N")->capture_default_str();
    s->add_option("--m", sweep.modulus, "Digits per dial M")->capture_default_str();
    s->add_option("--kbar-min", sweep.kbar_min, "Smallest mean effect size")->capture_default_str();
    s->add_option("--kbar-max", sweep.kbar_max, "Largest mean effect size (0 = N-1)")
        ->capture_default_str();
    s->add_option("--seeds", sweep.seeds, "Runs per effect size")->capture_default_str();
    s->add_option("--budget", sweep.budget, "Search budget per run")->capture_default_str();
    s->add_option("--seed", sweep.seed, "Base random seed")->capture_default_str();
    s->add_option("--out", sweep.out, "Output CSV path")->required();
    s->set_config("--config");

    // learn
    bbplan::LearnConfig learn;
    CLI::App* l = app.add_subcommand("learn", "Learn or generate a macro library");
    l->add_option("--domain", learn.domain, "cube | npuzzle | hanoi:<n> | strips:<file> | ...")
        ->capture_default_str();
    l->add_option("--source", learn.source, "focused | random | expert")->capture_default_str();
    l->add_option("--num-macros", learn.num_macros, "N_M: macros to keep (focused)");
    l->add_option("--repetitions", learn.repetitions, "R_M: restarts (focused)")
        ->capture_default_str();
    l->add_option("--budget", learn.budget, "B_M: total learning budget (focused)");
    l->add_option("--lengths-from", learn.lengths_from,
                  "Random source: copy macro lengths from this library file");
    l->add_option("--seed", learn.seed, "Random seed")->capture_default_str();
    l->add_option("--out", learn.out, "Output library path")->required();
    l->set_config("--config");

    // plan
    bbplan::PlanConfig plan;
    CLI::App* p = app.add_subcommand("plan", "Solve benchmark instances with GBFS(goal-count)");
    p->add_option("--domain", plan.domain, "cube | npuzzle | hanoi:<n> | strips:<file> | ...")
        ->capture_default_str();
    p->add_option("--library", plan.library, "Macro library file ('none' = primitives only)");
    p->add_option("--instances", plan.instances, "Number of problem instances")
        ->capture_default_str();
    p->add_option("--budget", plan.budget, "Search budget B_S (0 = domain default)");
    p->add_option("--goal", plan.goal, "default | random")->capture_default_str();
    p->add_option("--seed", plan.seed, "Base random seed")->capture_default_str();
    p->add_option("--out", plan.out, "Output CSV path")->required();
    p->set_config("--config");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) {
            if (!domain.empty() && domain != "suitcase") {
                throw std::runtime_error("correlate supports only the suitcase domain");
            }
            bbplan::run_correlate(correlate, std::cout);
        } else if (s->parsed()) {
            if (!domain.empty() && domain != "suitcase") {
                throw std::runtime_error("sweep supports only the suitcase domain");
            }
            bbplan::run_sweep(sweep, std::cout);
        } else if (l->parsed()) {
            bbplan::run_learn(learn, std::cout);
        } else if (p->parsed()) {
            bbplan::run_plan(plan, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

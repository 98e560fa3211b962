#pragma once
// Runtime configuration shared by the CLI commands: numeric tolerances,
// predicate caps, worker count, output directory and sampling seed.  The
// values load from a key=value file (SPEXLAB_CONFIG or --config) with
// command-line flags overriding; validate() enforces the documented ranges.

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "family.hpp"
#include "search.hpp"
#include "spectral.hpp"

namespace spexlab {

struct Config {
    double eigensolver_tol = 1e-13;  // Jacobi off-diagonal convergence factor
    double tie_tol = 1e-9;           // spectral-optimum tie pool width
    double root_tol = 1e-12;         // exact-escalation root separation
    FamilyCaps caps;
    int workers = 1;
    std::string outdir = ".";
    uint64_t seed = 42;

    // throws parse_error when a value is outside its documented range
    void validate() const {
        if (!(eigensolver_tol > 0)) throw parse_error("eigensolver-tol must be > 0");
        if (!(tie_tol > 0)) throw parse_error("tie-tol must be > 0");
        if (!(root_tol > 0)) throw parse_error("root-tol must be > 0");
        if (workers < 1) throw parse_error("workers must be >= 1");
        if (caps.cycle_cap < 3) throw parse_error("cycle-cap must be >= 3");
        if (caps.disjoint_cap < 3 || caps.disjoint_cap > 22)
            throw parse_error("disjoint-cap must be in [3, 22]");
        if (caps.minor_f_cap < 1 || caps.minor_f_cap > 10)
            throw parse_error("minor-f-cap must be in [1, 10]");
        if (caps.minor_g_cap < 1 || caps.minor_g_cap > 24)
            throw parse_error("minor-g-cap must be in [1, 24]");
        if (caps.trees_cap < 1 || caps.trees_cap > 12)
            throw parse_error("trees-cap must be in [1, 12]");
        if (caps.counterexample_cap < 1 || caps.counterexample_cap > 64)
            throw parse_error("counterexample-cap must be in [1, 64]");
    }

    SpectralOptions spectral_options() const {
        SpectralOptions o;
        o.eps = eigensolver_tol;
        return o;
    }

    SearchOptions search_options() const {
        SearchOptions o;
        o.workers = workers;
        o.tie_tol = tie_tol;
        o.exact_tie_tol = root_tol;
        o.caps = caps;
        o.spectral = spectral_options();
        return o;
    }
};

}  // namespace spexlab

#pragma once

#include "toric/lattice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

struct FactOutcome {
    bool ok = false;
    std::string expected;
    std::string observed;
};

struct GalleryFact {
    std::string statement;
    std::string operation;  // the CLI command that decides it
    std::function<FactOutcome(const Configuration&)> check;
};

struct GalleryEntry {
    std::string name;            // family name, e.g. "birkhoff"
    std::vector<long> params;    // numeric parameters, empty for fixed entries
    std::string description;
    Configuration config;
    std::vector<GalleryFact> facts;
    std::vector<std::string> notes;  // claims recorded but not checked
    bool heavy = false;              // takes more than a few seconds
};

/// Named configurations. `spec` is "name" or "name:args", e.g.
/// "birkhoff:4", "hexagon:1,2,4", "graph:1-2,2-3,3-1",
/// "matroid:4:1.2,1.3,2.4". Throws input on unknown names or bad
/// parameters.
Configuration make_config(std::string_view spec);
GalleryEntry make_entry(std::string_view spec);

/// Specs of the default gallery instances, in listing order.
std::vector<std::string> gallery_specs();

/// Searches variable permutations for a lexicographic order whose reduced
/// Gröbner basis has degree <= max_degree. Returns the variable priority.
std::optional<std::vector<std::size_t>> find_lex_order_with_degree(const Configuration& a, long max_degree,
                                                                   std::size_t max_tries = 40320);

/// The lattice points of conv of all coordinate permutations of (i, j, k),
/// sorted.
Configuration hexagon(long i, long j, long k);

}  // namespace toric

#pragma once

#include <string>
#include <vector>

#include "cyq/serialize.hpp"

namespace cyq {

struct CheckLine {
    enum class Status { Pass, Fail, Info };
    Status status = Status::Info;
    std::string name;
    std::string detail;
};

struct ExampleReport {
    std::string name;
    std::string title;
    std::vector<CheckLine> lines;
    json details = json::object();

    bool ok() const {
        for (const auto& line : lines)
            if (line.status == CheckLine::Status::Fail) return false;
        return true;
    }
};

/*
 * Runs one of the bundled constructions end to end: builds the automorphisms,
 * verifies the group structure, decomposes fixed loci, computes intersection
 * numbers and invariant-section bases, applies base-point and restriction
 * checks, and cross-checks the counts against the fixed-point identity. The
 * construction lives in the data file (see data/examples/); the file's
 * "pipeline" field selects which checks run.
 */
ExampleReport run_example(const json& data);

}  // namespace cyq

// Reproducibility manifest emitted by every CLI run: the command, its
// parameters, the seed, and the library version pin the output bytes; wall
// time is carried for operators but excluded from the identity view.

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace permspec {

extern const char* const kLibraryVersion;

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;  // sorted for stable output
    std::uint64_t seed = 0;
    std::string version = kLibraryVersion;
    long wall_ms = -1;  // negative means not measured

    // Single-line JSON.  With include_wall == false the result depends only
    // on fields that determine the run's output bytes.
    std::string to_json(bool include_wall = true) const;
};

}  // namespace permspec

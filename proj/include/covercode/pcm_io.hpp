#pragma once
// Parity-check matrix text format (bit-exact):
//   line 1: %covercode-pcm v1
//   line 2: q <p>^<e> rows <r> cols <n>
//   lines 3..r+2: n space-separated element integers
// plus the run-manifest sidecar written next to every CLI artifact.

#include <string>

#include "covercode/codes.hpp"

namespace covercode::io {

std::string pcm_to_string(const codes::ParityCheck& H);
codes::ParityCheck pcm_from_string(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

void write_pcm(const std::string& path, const codes::ParityCheck& H);
codes::ParityCheck read_pcm(const std::string& path);

struct Manifest {
    std::string command;                     // the full command line
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::vector<std::pair<std::string, std::string>> inputs;   // path, digest
    std::vector<std::pair<std::string, std::string>> outputs;  // path, digest
    double wall_seconds = 0;

    std::string serialize() const;
};

}  // namespace covercode::io

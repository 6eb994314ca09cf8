#pragma once

#include <string>

#include "polarion/io/config.hpp"

namespace polarion::io {

struct PipelineConfig {
    json raw;                // full parsed config
    std::string output_dir;  // artifact destination
};

PipelineConfig load_pipeline_config(const std::string& path);

// QNM solve -> rapidities -> interaction matrix -> sweep. Writes modes.json,
// rapidities.json, gkls.json, umatrix.json, sweep.csv and manifest.json into
// the output directory. Returns 0 on success; on a stage failure the partial
// artifacts are kept, the manifest records the failing stage, and the return
// value is nonzero.
int run_pipeline(const PipelineConfig& cfg);

}  // namespace polarion::io

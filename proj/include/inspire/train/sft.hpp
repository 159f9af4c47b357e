#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "inspire/core/types.hpp"
#include "inspire/debate/prompts.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::train {

struct SftRecord {
    std::string instruction;  // opening template for topic + stance
    std::string input;        // empty; kept for trainer-convention schemas
    std::string output;       // teacher reply with both markers
};

struct SftBuildStats {
    int accepted = 0;
    int skipped = 0;
};

// Refusal patterns of safety-tuned teachers ("I can't provide an argument...").
bool is_refusal(const std::string& reply);

// One record per topic x stance. Replies must carry both output-format
// markers, a non-empty argument and no refusal pattern; rejects are retried
// once, then skipped with a log entry. Zero accepted records is a BuildError.
std::vector<SftRecord> build_sft_dataset(gateways::GatewayHub& hub,
                                         const std::string& teacher_engine,
                                         const std::vector<Topic>& topics,
                                         SftBuildStats* stats = nullptr,
                                         double temperature = 0.7, int max_tokens = 1024);

// JSON-lines with a schema header line, then {"instruction","input","output"}.
void write_sft_jsonl(const std::filesystem::path& path, const std::vector<SftRecord>& records);

}  // namespace inspire::train

#pragma once

#include <string>
#include <vector>

namespace amgm::io {

// Splits an inline sample like "[1, 4]", "1,4" or "1 4" into decimal tokens.
// Tokens are kept as strings so ingestion can bracket the written decimal
// exactly. Throws std::invalid_argument on empty or malformed input.
std::vector<std::string> parse_inline_values(const std::string& text);

// Reads one or more samples from a file, each as a list of decimal tokens:
//  - JSON array of arrays: one sample per inner array (numbers or strings)
//  - flat JSON array: a single sample
//  - JSON report produced by this tool: re-ingests each result's values from
//    the printed lo endpoints (an enclosure of the original ingested points)
//  - anything else is treated as text, one sample per nonempty line, values
//    separated by commas or whitespace, with # starting a comment
// Throws std::invalid_argument when the file is missing or yields no sample.
std::vector<std::vector<std::string>> read_samples(const std::string& path);

}

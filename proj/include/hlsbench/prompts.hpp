#pragma once

#include <map>
#include <string>

#include "hlsbench/corpus.hpp"

namespace hlsbench {

enum class AuthoringPromptKind { PortVerilog, DescribeDesign };

AuthoringPromptKind parse_authoring_prompt_kind(const std::string& s);

// Fills the corpus-authoring templates. port_verilog expects inputs
// {prompt, reference_code, testbench}; describe_design expects {code}.
// Values are substituted verbatim and never rescanned.
std::string render_authoring_prompt(AuthoringPromptKind kind,
                                    const std::map<std::string, std::string>& inputs);

// The evaluation prompt sent to a model under test, with the task
// instruction filled into the instruction slot.
std::string render_codegen_prompt(const BenchmarkTask& task);

}  // namespace hlsbench

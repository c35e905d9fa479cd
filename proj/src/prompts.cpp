#include "hlsbench/prompts.hpp"

#include <vector>

#include "hlsbench/errors.hpp"

namespace hlsbench {

namespace {

const char* kPortVerilogTemplate =
    R"(You are an expert in HLS-C++ and Verilog code generation. I will give you a prompt for a hardware design written for verilog, the reference code in verilog and it's testbench.

Your task is to generate the reference design and the testbench for HLS-C++. Your generated testbench must reflect the same logic of the reference code.

All your generated codes will be run in HLS tools. While writing the testbenches consider all possible scenario. Your testbench has to be self checking. Write the codes without the 'RefModule'.

The testbench will detect errors of design file but it must not show compilation and simulation error. It should also always return 0. Use all necessary and applicable pragmas for better optimization in your design code.

The three items for verilog are below:

{prompt}
{reference_code}
{testbench}
)";

const char* kDescribeDesignTemplate =
    R"(You are an expert in writing and explaining HLS-C++ hardware deisgn. Describe the functionality of the HLS design from a high-level, system-design perspective.

Focus on what the module computes, how data flows through it, and how control logic operates across different stages of execution. Explain its functional behavior considering pipelining, memory access, and synthesis constraints.

Avoid unnecessary low-level details like variable names or line-by-line mappings. Instead, communicate the purpose, the algorithmic steps, the I/O behavior, and any state or timing dependencies using precise, practical language that would guide someone implementing or verifying the design.

Include timing models, pipeline stages, and basic handshaking logic if relevant, but keep the explanation focused and hardware-aware.

{code}
)";

const char* kCodegenTemplate =
    R"(Your role is to act as an expert in HLS C++ code development. You must thoroughly explore each question through a systematic and deliberate thinking process—engaging in cycles of analysis, summarization, exploration, reassessment, reflection, backtracing, and iteration to develop well-considered solutions.

Based on the provided instructions, you are expected to generate precise, optimized, and accurate synthesizable HLS C++ code that meets the following requirements.

    1. Output only synthesizable C++ code (no extra text or explanation).
    2. Include necessary headers (e.g. ap_int.h).
    3. The top-level function signature must be exactly as given in the instruction.
    4. Insert suitable HLS pragmas.
    5. Self-contained: do not rely on external libraries or files beyond standard headers.

### Instruction:{instruction}
### Input:{input}
### Response:
)";

// Replaces each {name} token; inserted values are taken literally.
std::string substitute(const std::string& tmpl,
                       const std::vector<std::pair<std::string, std::string>>& slots) {
  std::string out = tmpl;
  for (const auto& [name, value] : slots) {
    const std::string token = "{" + name + "}";
    std::size_t pos = 0;
    while ((pos = out.find(token, pos)) != std::string::npos) {
      out.replace(pos, token.size(), value);
      pos += value.size();
    }
  }
  return out;
}

std::string require_input(const std::map<std::string, std::string>& inputs,
                          const std::string& key) {
  auto it = inputs.find(key);
  if (it == inputs.end()) {
    throw Error(Errc::MissingPlaceholder, "authoring prompt requires input '" + key + "'");
  }
  return it->second;
}

}  // namespace

AuthoringPromptKind parse_authoring_prompt_kind(const std::string& s) {
  if (s == "port_verilog") return AuthoringPromptKind::PortVerilog;
  if (s == "describe_design") return AuthoringPromptKind::DescribeDesign;
  throw Error(Errc::DomainViolation, "unknown authoring prompt kind: " + s);
}

std::string render_authoring_prompt(AuthoringPromptKind kind,
                                    const std::map<std::string, std::string>& inputs) {
  switch (kind) {
    case AuthoringPromptKind::PortVerilog:
      return substitute(kPortVerilogTemplate,
                        {{"prompt", require_input(inputs, "prompt")},
                         {"reference_code", require_input(inputs, "reference_code")},
                         {"testbench", require_input(inputs, "testbench")}});
    case AuthoringPromptKind::DescribeDesign:
      return substitute(kDescribeDesignTemplate, {{"code", require_input(inputs, "code")}});
  }
  throw Error(Errc::DomainViolation, "unreachable prompt kind");
}

std::string render_codegen_prompt(const BenchmarkTask& task) {
  return substitute(kCodegenTemplate, {{"instruction", task.instruction}, {"input", ""}});
}

}  // namespace hlsbench

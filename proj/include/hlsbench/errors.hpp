#pragma once

#include <stdexcept>
#include <string>

namespace hlsbench {

enum class Errc {
  // corpus
  MissingFile,
  DuplicateId,
  SignatureMismatch,
  MissingPlaceholder,
  ManifestVersion,
  // model gateway
  BackendUnavailable,
  CacheMiss,
  // dse / config
  YamlSyntax,
  DomainViolation,
  ConfigError,
  // toolchain
  IoError,
  InvalidCandidate,
  StageOrder,
  ToolMissing,
  // reports
  UnrecognizedFormat,
  FieldMissing,
  ConsistencyError,
  // metrics
  KOutOfRange,
  MetricAbsent,
  NoComparableMetric,
  // engine
  UnknownRun,
  CorruptState,
};

const char* errc_name(Errc c);

// All harness failures surface as Error with a stable code; tool failures do
// not throw, they are stage statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hlsbench

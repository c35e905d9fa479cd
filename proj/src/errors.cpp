#include "hlsbench/errors.hpp"

namespace hlsbench {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingFile: return "MissingFile";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::MissingPlaceholder: return "MissingPlaceholder";
    case Errc::ManifestVersion: return "ManifestVersion";
    case Errc::BackendUnavailable: return "BackendUnavailable";
    case Errc::CacheMiss: return "CacheMiss";
    case Errc::YamlSyntax: return "YamlSyntax";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
    case Errc::InvalidCandidate: return "InvalidCandidate";
    case Errc::StageOrder: return "StageOrder";
    case Errc::ToolMissing: return "ToolMissing";
    case Errc::UnrecognizedFormat: return "UnrecognizedFormat";
    case Errc::FieldMissing: return "FieldMissing";
    case Errc::ConsistencyError: return "ConsistencyError";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::MetricAbsent: return "MetricAbsent";
    case Errc::NoComparableMetric: return "NoComparableMetric";
    case Errc::UnknownRun: return "UnknownRun";
    case Errc::CorruptState: return "CorruptState";
  }
  return "Unknown";
}

}  // namespace hlsbench

#pragma once

#include "nodelift/io/json_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace nodelift::certify {

/// (a) only nodes mod p, (b) no nodes in characteristic 0, (c) rigidity,
/// (d) no singular section at level p^2.
enum class Hypothesis { OnlyNodes, SmoothInCharZero, Rigid, NoSingularSection };
std::string to_string(Hypothesis h);
std::string label(Hypothesis h); ///< "a".."d"

enum class Status { Verified, Asserted, Failed };
std::string to_string(Status s); ///< "verified-computationally", "asserted-from-paper", "failed"

/// One report (or assertion) offered for a hypothesis. `source` is the command
/// line or file that produced it.
struct EvidenceItem {
    Hypothesis hypothesis = Hypothesis::OnlyNodes;
    std::string source;
    io::Json report;
};

struct Check {
    Hypothesis hypothesis = Hypothesis::OnlyNodes;
    Status status = Status::Failed;
    std::vector<std::string> sources;
    std::string detail;
};

struct EvidenceBundle {
    std::string identifier;
    std::uint64_t p = 0;
    std::vector<Check> checks; ///< one per hypothesis, in order a..d
    /// "evidence-complete" or "evidence-incomplete".
    std::string verdict;
    bool complete() const { return verdict == "evidence-complete"; }
};

/// Judges each hypothesis from its reports. MissingEvidence when there are no
/// items at all or some hypothesis has none.
EvidenceBundle assemble_certificate(const std::string& identifier, std::uint64_t p,
                                    const std::vector<EvidenceItem>& items);

io::Json certificate_to_json(const EvidenceBundle& b);

/// Assertion item for hypotheses that are quoted rather than computed.
EvidenceItem assertion(Hypothesis h, const std::string& claim, const std::string& citation);

/// Reads {"identifier", "p", "evidence": [{"hypothesis": "a", "report": PATH | "assertion": ..., "citation": ...}]}
/// resolving report paths against the manifest's directory.
EvidenceBundle certificate_from_manifest(const std::filesystem::path& manifest);

/// Built-in pipelines over the bundled data: arrangement 86a at p = 3 and the
/// Clebsch cubic at p = 5.
std::vector<EvidenceItem> pipeline_86a(const std::filesystem::path& data_dir, unsigned jobs = 1);
std::vector<EvidenceItem> pipeline_clebsch(const std::filesystem::path& data_dir, unsigned jobs = 1);

} // namespace nodelift::certify

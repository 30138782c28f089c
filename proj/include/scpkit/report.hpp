#ifndef SCPKIT_REPORT_HPP
#define SCPKIT_REPORT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scpkit/matrix.hpp"
#include "scpkit/moments.hpp"
#include "scpkit/scp2d.hpp"
#include "scpkit/shifts.hpp"

namespace scpkit {

enum class InstanceKind { scp2d_quadratic, scp2d_family, scp1d, moments, obstruction };

// A parsed problem instance. The kind determines which payload is populated;
// every number is an exact rational.
struct Instance {
    InstanceKind kind = InstanceKind::scp2d_quadratic;
    std::optional<QuadraticData> quadratic;
    std::optional<WeightFamily2> family;
    std::optional<WeightSeq1> weights1;
    std::optional<MomentSeq2> moment_table;
    int depth = 6;
    std::optional<std::pair<Rat, Rat>> translate_by;
};

// Machine-readable outcome. `status` alone determines the exit code:
//   0  solved | feasible | flat-feasible | ok
//   1  no-completion | obstructed
//   2  input-error | unsupported
//   3  internal-error
struct Report {
    std::string status;
    std::optional<std::string> case_tag;
    std::optional<int> rank;
    std::optional<std::array<Rat, 4>> new_weights;  // p, q, r, s
    std::optional<AtomicMeasure2> measure;
    std::optional<AtomicMeasure1> measure1;  // one-variable completions
    std::map<std::string, Mat> matrices;
    std::map<std::string, bool> checks;
    std::optional<std::pair<Rat, Rat>> witness;
    std::optional<std::string> detail;
    std::optional<std::string> relation_poly;
    std::optional<std::pair<Rat, Rat>> relation_hk;  // (h, k)
    std::map<std::string, AffineForm> coefficients;
    std::map<std::string, AffineForm> propagated;  // key "i,j"
    std::optional<MomentSeq2> moments_out;
    std::vector<std::string> relations;
};

enum class ReportFormat { json, text };

int exit_code_for(const std::string& status);

// Strict JSON instance parser: unknown fields rejected, rationals accepted
// as "p/q" strings or integers, floats refused.
Instance parse_instance(const std::string& text);

// Dispatches a CLI command on a parsed instance. Never throws: every error
// is folded into the report status.
std::pair<Report, int> run(const std::string& command, const Instance& instance);

// json mode is canonical (sorted keys, no whitespace variance); text mode is
// a human summary with the measure in δ-notation.
std::string format_report(const Report& r, ReportFormat mode);

// Inverse of the json mode; rejects unknown fields.
Report parse_report(const std::string& text);

} // namespace scpkit

#endif // SCPKIT_REPORT_HPP

#ifndef TAVG_JSON_IO_HPP
#define TAVG_JSON_IO_HPP

#include <iosfwd>

#include <json.hpp>

#include "tavg/averages.hpp"
#include "tavg/oracle.hpp"
#include "tavg/signal.hpp"

namespace tavg {

/// SignalSpec <-> JSON. The document carries `domain` plus exactly one of
/// `terms` (list of {amp, re_base, im_base, power}), `periodic_pattern`,
/// or `product_of` (pair of nested specs). The term format stores real
/// amplitudes; serializing a spec with non-real amplitudes throws
/// SerializationError.
nlohmann::json spec_to_json(const SignalSpec& spec);
SignalSpec spec_from_json(const nlohmann::json& j);

/// AverageVerdict -> {value, formal_limit: [re, im], applicability,
/// poles: [{re, im, mult}], notes}. Field names are part of the CLI
/// contract.
nlohmann::json verdict_to_json(const AverageVerdict& verdict);

nlohmann::json trace_summary_json(const RunningAverageTrace& trace);

/// CSV with header `n,running_average`, one checkpoint per row. For
/// continuous traces the first column holds the time.
void write_trace_csv(std::ostream& os, const RunningAverageTrace& trace);

}  // namespace tavg

#endif

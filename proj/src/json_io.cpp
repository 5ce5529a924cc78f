#include "tavg/json_io.hpp"

#include <cmath>
#include <ostream>

#include "tavg/errors.hpp"

namespace tavg {

using nlohmann::json;

json spec_to_json(const SignalSpec& spec) {
    json j;
    j["domain"] = to_string(spec.domain());
    switch (spec.kind()) {
        case SignalSpec::Kind::Terms: {
            json terms = json::array();
            for (const auto& t : spec.terms()) {
                if (std::abs(t.amplitude.imag()) > 1e-12 * std::abs(t.amplitude))
                    throw Error(ErrorCode::SerializationError,
                                "term amplitude is not real; the JSON term format stores real "
                                "amplitudes only");
                terms.push_back({{"amp", t.amplitude.real()},
                                 {"re_base", t.base_or_rate.real()},
                                 {"im_base", t.base_or_rate.imag()},
                                 {"power", t.power}});
            }
            j["terms"] = terms;
            break;
        }
        case SignalSpec::Kind::PeriodicPattern:
            j["periodic_pattern"] = spec.periodic_pattern();
            break;
        case SignalSpec::Kind::Product:
            j["product_of"] = json::array(
                {spec_to_json(spec.product_first()), spec_to_json(spec.product_second())});
            break;
    }
    return j;
}

SignalSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "spec document must be a JSON object");
    if (!j.contains("domain") || !j.at("domain").is_string())
        throw Error(ErrorCode::ParseError, "spec needs a string `domain` field");
    std::string domain_name = j.at("domain").get<std::string>();
    SignalDomain domain;
    if (domain_name == "discrete")
        domain = SignalDomain::DiscreteTime;
    else if (domain_name == "continuous")
        domain = SignalDomain::ContinuousTime;
    else
        throw Error(ErrorCode::ParseError,
                    "unknown domain `" + domain_name + "` (expected discrete|continuous)");

    int populated = static_cast<int>(j.contains("terms")) +
                    static_cast<int>(j.contains("periodic_pattern")) +
                    static_cast<int>(j.contains("product_of"));
    if (populated != 1)
        throw Error(ErrorCode::ParseError,
                    "spec must populate exactly one of terms|periodic_pattern|product_of");

    if (j.contains("terms")) {
        const auto& terms = j.at("terms");
        if (!terms.is_array()) throw Error(ErrorCode::ParseError, "`terms` must be an array");
        std::vector<ExpPolyTerm> parsed;
        for (const auto& t : terms) {
            if (!t.is_object() || !t.contains("amp") || !t.contains("re_base") ||
                !t.contains("im_base") || !t.contains("power"))
                throw Error(ErrorCode::ParseError,
                            "each term needs amp, re_base, im_base and power");
            ExpPolyTerm term;
            term.amplitude = Complex(t.at("amp").get<double>());
            term.base_or_rate =
                Complex(t.at("re_base").get<double>(), t.at("im_base").get<double>());
            term.power = t.at("power").get<int>();
            parsed.push_back(term);
        }
        return SignalSpec::from_terms(domain, std::move(parsed));
    }
    if (j.contains("periodic_pattern")) {
        if (domain != SignalDomain::DiscreteTime)
            throw Error(ErrorCode::ParseError, "periodic patterns are discrete-time only");
        const auto& pattern = j.at("periodic_pattern");
        if (!pattern.is_array())
            throw Error(ErrorCode::ParseError, "`periodic_pattern` must be an array of numbers");
        return SignalSpec::periodic(pattern.get<std::vector<double>>());
    }
    const auto& product = j.at("product_of");
    if (!product.is_array() || product.size() != 2)
        throw Error(ErrorCode::ParseError, "`product_of` must hold exactly two specs");
    return SignalSpec::product(spec_from_json(product[0]), spec_from_json(product[1]));
}

json verdict_to_json(const AverageVerdict& verdict) {
    json j;
    j["value"] = verdict.value ? json(*verdict.value) : json(nullptr);
    j["formal_limit"] = verdict.formal_limit
                            ? json::array({verdict.formal_limit->real(), verdict.formal_limit->imag()})
                            : json(nullptr);
    j["applicability"] = to_string(verdict.applicability);
    json poles = json::array();
    for (const auto& p : verdict.diagnostics.poles)
        poles.push_back({{"re", p.location.real()},
                         {"im", p.location.imag()},
                         {"mult", p.multiplicity}});
    j["poles"] = poles;
    j["notes"] = verdict.notes;
    return j;
}

json trace_summary_json(const RunningAverageTrace& trace) {
    return json{{"final_estimate", trace.final_estimate},
                {"error_estimate", trace.error_estimate},
                {"converged", trace.converged},
                {"horizon", trace.horizon}};
}

void write_trace_csv(std::ostream& os, const RunningAverageTrace& trace) {
    os << "n,running_average\n";
    os.precision(17);
    for (const auto& [n, value] : trace.samples) os << n << "," << value << "\n";
}

}  // namespace tavg

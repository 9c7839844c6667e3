#include "apcoprime/json_io.hpp"

#include "apcoprime/errors.hpp"

namespace apcoprime {

namespace {

std::string int_str(const Integer& n) { return n.get_str(); }

Integer int_from(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    return parse_integer(j.get<std::string>());
}

std::vector<long> long_list(const json& j) { return j.get<std::vector<long>>(); }

}  // namespace

json to_json(const DeltaResult& r) {
    json j;
    j["value"] = r.prime ? json(*r.prime) : json(nullptr);
    j["infinite_or_beyond_bound"] = !r.prime.has_value();
    j["bound"] = r.bound;
    j["method"] = to_string(r.method);
    return j;
}

DeltaResult delta_result_from_json(const json& j) {
    DeltaResult r;
    if (!j.at("value").is_null()) r.prime = j.at("value").get<long>();
    r.bound = j.at("bound").get<long>();
    const auto method = j.at("method").get<std::string>();
    if (method == "closed_form_quadratic")
        r.method = DeltaMethod::ClosedFormQuadratic;
    else if (method == "closed_form_cyclotomic")
        r.method = DeltaMethod::ClosedFormCyclotomic;
    else if (method == "splitting_oracle")
        r.method = DeltaMethod::SplittingOracle;
    else
        throw ParseError("unknown delta method '" + method + "'");
    return r;
}

json to_json(const CoprimeReport& r) {
    json offenders = json::object();
    for (const auto& [i, j] : r.offenders) offenders[std::to_string(i)] = j;
    return {{"witness", r.witness ? json(*r.witness) : json(nullptr)}, {"offenders", offenders}};
}

CoprimeReport coprime_report_from_json(const json& j) {
    CoprimeReport r;
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<long>();
    for (const auto& [key, value] : j.at("offenders").items())
        r.offenders[std::stol(key)] = value.get<long>();
    return r;
}

json to_json(const ArithmeticProgression& ap) {
    json terms = json::array();
    for (const auto& t : ap.terms()) terms.push_back(format_element(t));
    return {{"ring", ap.ring().tag()},
            {"a", format_element(ap.first())},
            {"d", format_element(ap.difference())},
            {"n", ap.length()},
            {"terms", terms}};
}

ArithmeticProgression progression_from_json(const json& j, const RingAllowlist& allow) {
    const RingDescriptor ring = parse_ring(j.at("ring").get<std::string>(), allow);
    return {parse_element(j.at("a").get<std::string>(), ring),
            parse_element(j.at("d").get<std::string>(), ring), j.at("n").get<long>()};
}

json to_json(const SweepReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"a", format_element(v.first)},
                              {"d", format_element(v.difference)},
                              {"n", v.length}});
    }
    return {{"ring", r.ring.tag()},
            {"coord_bound", r.coord_bound},
            {"n_max", r.n_max},
            {"pairs_checked", r.pairs_checked},
            {"progressions_checked", r.progressions_checked},
            {"violations", violations}};
}

SweepReport sweep_report_from_json(const json& j, const RingAllowlist& allow) {
    SweepReport r;
    r.ring = parse_ring(j.at("ring").get<std::string>(), allow);
    r.coord_bound = j.at("coord_bound").get<long>();
    r.n_max = j.at("n_max").get<long>();
    r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    r.progressions_checked = j.at("progressions_checked").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) {
        r.violations.push_back({parse_element(v.at("a").get<std::string>(), r.ring),
                                parse_element(v.at("d").get<std::string>(), r.ring),
                                v.at("n").get<long>()});
    }
    return r;
}

json to_json(const RingCounterexample& r) {
    return {{"ring", r.progression.ring().tag()},
            {"delta", r.delta},
            {"P", format_element(r.p_prime)},
            {"Q", format_element(r.q_prime)},
            {"modulus", format_element(r.modulus)},
            {"progression", to_json(r.progression)}};
}

RingCounterexample ring_counterexample_from_json(const json& j, const RingAllowlist& allow) {
    const RingDescriptor ring = parse_ring(j.at("ring").get<std::string>(), allow);
    return {progression_from_json(j.at("progression"), allow), j.at("delta").get<long>(),
            parse_element(j.at("P").get<std::string>(), ring),
            parse_element(j.at("Q").get<std::string>(), ring),
            parse_element(j.at("modulus").get<std::string>(), ring)};
}

json to_json(const CrtOutcome& r, const RingDescriptor& ring) {
    json j;
    j["ring"] = ring.tag();
    j["solved"] = r.solved();
    j["solution"] = r.solution ? json(format_element(r.solution->value)) : json(nullptr);
    j["modulus"] = r.solution ? json(format_element(r.solution->modulus)) : json(nullptr);
    j["witness"] = r.witness ? json::array({r.witness->i, r.witness->j}) : json(nullptr);
    return j;
}

CrtOutcome crt_outcome_from_json(const json& j, const RingAllowlist& allow) {
    const RingDescriptor ring = parse_ring(j.at("ring").get<std::string>(), allow);
    CrtOutcome r;
    if (!j.at("solution").is_null()) {
        r.solution = CrtSolution{parse_element(j.at("solution").get<std::string>(), ring),
                                 parse_element(j.at("modulus").get<std::string>(), ring)};
    }
    if (!j.at("witness").is_null()) {
        const auto w = j.at("witness").get<std::vector<std::size_t>>();
        if (w.size() != 2) throw ParseError("witness must be a pair of indices");
        r.witness = IncompatiblePair{w[0], w[1]};
    }
    return r;
}

json to_json(const std::vector<SquareTriple>& triples) {
    json out = json::array();
    for (const auto& t : triples)
        out.push_back({{"s1", int_str(t.s1)}, {"s2", int_str(t.s2)}, {"s3", int_str(t.s3)}});
    return out;
}

std::vector<SquareTriple> square_triples_from_json(const json& j) {
    std::vector<SquareTriple> out;
    for (const auto& t : j) out.push_back({int_from(t.at("s1")), int_from(t.at("s2")), int_from(t.at("s3"))});
    return out;
}

json to_json(const PowerCheckReport& r) {
    return {{"first_coprime_to_difference", r.first_coprime_to_difference},
            {"length_within_bound", r.length_within_bound},
            {"has_zero_term", r.has_zero_term},
            {"unit_terms", r.unit_terms},
            {"perfect_power_terms", r.perfect_power_terms},
            {"positive_integer_hypotheses", r.positive_integer_hypotheses},
            {"ring_hypotheses", r.ring_hypotheses},
            {"hypotheses_hold", r.hypotheses_hold()},
            {"product", int_str(r.product)},
            {"product_is_perfect_power", r.product_is_perfect_power}};
}

PowerCheckReport power_check_from_json(const json& j) {
    PowerCheckReport r;
    r.first_coprime_to_difference = j.at("first_coprime_to_difference").get<bool>();
    r.length_within_bound = j.at("length_within_bound").get<bool>();
    r.has_zero_term = j.at("has_zero_term").get<bool>();
    r.unit_terms = long_list(j.at("unit_terms"));
    r.perfect_power_terms = long_list(j.at("perfect_power_terms"));
    r.positive_integer_hypotheses = j.at("positive_integer_hypotheses").get<bool>();
    r.ring_hypotheses = j.at("ring_hypotheses").get<bool>();
    r.product = int_from(j.at("product"));
    r.product_is_perfect_power = j.at("product_is_perfect_power").get<bool>();
    return r;
}

Congruence congruence_from_json(const json& j, const RingDescriptor& ring) {
    auto element = [&](const json& v) {
        if (v.is_number_integer()) return embed_int(v.get<long>(), ring);
        if (!v.is_string()) throw ParseError("congruence entries must be strings or integers");
        return parse_element(v.get<std::string>(), ring);
    };
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("congruence array must be [residue, modulus]");
        return {element(j[0]), element(j[1])};
    }
    if (j.is_object()) return {element(j.at("residue")), element(j.at("modulus"))};
    throw ParseError("congruence must be an object or a two-element array");
}

}  // namespace apcoprime

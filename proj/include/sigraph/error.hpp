#pragma once

#include <stdexcept>
#include <string>

namespace sigraph {

enum class Errc {
    invalid_argument,
    invalid_edge,
    invalid_vertex,
    empty_query,
    search_budget_exceeded,
    listing_mismatch,
    size_overflow,
    invalid_index,
    invalid_chain,
    incompatible_coordinates,
    invalid_sample_count,
    invalid_distance_spec,
    radius_too_large,
    not_bounded_away_from_zero,
    degenerate_pair,
    genericity_failure,
    dimension_error,
    not_a_graph_relation,
    duplicate_vertex,
    parse_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::invalid_edge: return "invalid_edge";
        case Errc::invalid_vertex: return "invalid_vertex";
        case Errc::empty_query: return "empty_query";
        case Errc::search_budget_exceeded: return "search_budget_exceeded";
        case Errc::listing_mismatch: return "listing_mismatch";
        case Errc::size_overflow: return "size_overflow";
        case Errc::invalid_index: return "invalid_index";
        case Errc::invalid_chain: return "invalid_chain";
        case Errc::incompatible_coordinates: return "incompatible_coordinates";
        case Errc::invalid_sample_count: return "invalid_sample_count";
        case Errc::invalid_distance_spec: return "invalid_distance_spec";
        case Errc::radius_too_large: return "radius_too_large";
        case Errc::not_bounded_away_from_zero: return "not_bounded_away_from_zero";
        case Errc::degenerate_pair: return "degenerate_pair";
        case Errc::genericity_failure: return "genericity_failure";
        case Errc::dimension_error: return "dimension_error";
        case Errc::not_a_graph_relation: return "not_a_graph_relation";
        case Errc::duplicate_vertex: return "duplicate_vertex";
        case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace sigraph

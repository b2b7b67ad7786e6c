#pragma once

#include <stdexcept>
#include <string>

namespace wsz {

enum class Errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    disconnected,
    edge_not_present,
    not_a_tree,
    overflow,
    malformed_level_sequence,
    bad_header,
    truncated_bits,
    invalid_character,
    trailing_data,
    order_too_large,
    precondition_violated,
    not_internal_leaf_edge,
    budget_exceeded,
    bad_input,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::loop_edge: return "loop_edge";
        case Errc::duplicate_edge: return "duplicate_edge";
        case Errc::vertex_out_of_range: return "vertex_out_of_range";
        case Errc::disconnected: return "disconnected";
        case Errc::edge_not_present: return "edge_not_present";
        case Errc::not_a_tree: return "not_a_tree";
        case Errc::overflow: return "overflow";
        case Errc::malformed_level_sequence: return "malformed_level_sequence";
        case Errc::bad_header: return "bad_header";
        case Errc::truncated_bits: return "truncated_bits";
        case Errc::invalid_character: return "invalid_character";
        case Errc::trailing_data: return "trailing_data";
        case Errc::order_too_large: return "order_too_large";
        case Errc::precondition_violated: return "precondition_violated";
        case Errc::not_internal_leaf_edge: return "not_internal_leaf_edge";
        case Errc::budget_exceeded: return "budget_exceeded";
        case Errc::bad_input: return "bad_input";
    }
    return "unknown";
}

}  // namespace wsz

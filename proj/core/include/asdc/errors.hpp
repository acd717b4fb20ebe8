#pragma once

#include <stdexcept>
#include <string>

namespace asdc {

/// Error codes for domain-level failures (bad inputs, violated preconditions).
enum class errc {
    vertex_out_of_range,
    invalid_complex,
    dual_not_complex,
    not_a_facet,
    not_a_face,
    not_asd,
    too_small,
    too_large,
    not_generic,
    invalid_lengths,
    size_mismatch,
    blocks_overlap,
    invalid_cycle,
    ambient_mismatch,
    not_distinct,
    not_top_degree,
    degree_mismatch,
    even_cycle,
    not_unicycle,
    invalid_partition,
    parse_error,
};

const char* errc_name(errc code);

/// Thrown on invalid user input or violated operation preconditions.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// Thrown when an internal consistency check fails.  Never a user error:
/// it means an invalid value slipped past the constructors or an algorithm
/// invariant broke.
class Defect : public std::logic_error {
  public:
    explicit Defect(const std::string& what) : std::logic_error("internal defect: " + what) {}
};

}  // namespace asdc

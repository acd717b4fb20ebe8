#include "asdc/errors.hpp"

namespace asdc {

const char* errc_name(errc code) {
    switch (code) {
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::invalid_complex: return "InvalidComplex";
        case errc::dual_not_complex: return "DualNotComplex";
        case errc::not_a_facet: return "NotAFacet";
        case errc::not_a_face: return "NotAFace";
        case errc::not_asd: return "NotASD";
        case errc::too_small: return "TooSmall";
        case errc::too_large: return "TooLarge";
        case errc::not_generic: return "NotGeneric";
        case errc::invalid_lengths: return "InvalidLengths";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::blocks_overlap: return "BlocksOverlap";
        case errc::invalid_cycle: return "InvalidCycle";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::not_distinct: return "NotDistinct";
        case errc::not_top_degree: return "NotTopDegree";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::even_cycle: return "EvenCycle";
        case errc::not_unicycle: return "NotUnicycle";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace asdc

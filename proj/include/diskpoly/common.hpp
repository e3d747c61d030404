#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diskpoly {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Error conditions surfaced by the library. Codes are part of the API
// contract; tests match on them rather than on message text.
enum class errc {
    empty_point_set,
    no_bracket,
    invalid_geometry,
    empty_or_degenerate_body,
    erosion_empty,
    invalid_parameter,
    not_touching_form,
    no_vertices,
    scale_mismatch,
    out_of_domain,
    family_tuning_failed,
    vertex_mismatch,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_point_set: return "EmptyPointSet";
        case errc::no_bracket: return "NoBracket";
        case errc::invalid_geometry: return "InvalidGeometry";
        case errc::empty_or_degenerate_body: return "EmptyOrDegenerateBody";
        case errc::erosion_empty: return "ErosionEmpty";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::not_touching_form: return "NotTouchingForm";
        case errc::no_vertices: return "NoVertices";
        case errc::scale_mismatch: return "ScaleMismatch";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::family_tuning_failed: return "FamilyTuningFailed";
        case errc::vertex_mismatch: return "VertexMismatch";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

class geom_error : public std::runtime_error {
public:
    geom_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw geom_error(code, what);
}

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a == two_pi) a = 0.0;
    return a;
}

// Wraps an angle into (-pi, pi].
inline double wrap_signed(double a) {
    a = std::fmod(a, two_pi);
    if (a <= -pi) a += two_pi;
    if (a > pi) a -= two_pi;
    return a;
}

}  // namespace diskpoly

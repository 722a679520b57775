#pragma once

#include "enriques/errors.hpp"

#include <string>

namespace enriques {

// Genericity level of the surface the numerical question is asked on.
// very_general: no (-2)-curves, irreducible rational curves are 2-divisible.
// general: smooth, unnodal statements unavailable; only inclusion-safe facts.
// arbitrary: any Enriques surface; only lattice-theoretic facts.
enum class SurfaceModel { very_general, general, arbitrary };

inline std::string to_string(SurfaceModel m)
{
    switch (m) {
    case SurfaceModel::very_general: return "very_general";
    case SurfaceModel::general: return "general";
    case SurfaceModel::arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

inline SurfaceModel parse_surface_model(const std::string& s)
{
    if (s == "very_general")
        return SurfaceModel::very_general;
    if (s == "general")
        return SurfaceModel::general;
    if (s == "arbitrary")
        return SurfaceModel::arbitrary;
    throw BadParameterError("unknown surface model '" + s +
                            "' (expected very_general, general or arbitrary)");
}

} // namespace enriques

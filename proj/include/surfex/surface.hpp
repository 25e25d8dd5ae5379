#pragma once

#include <optional>
#include <string>

#include "surfex/hypercore.hpp"

namespace surfex {

struct SkeletonCounts {
    std::size_t v = 0;  // vertices lying on at least one edge
    std::size_t e = 0;  // distinct 2-subsets of edges
    std::size_t f = 0;  // 3-edges
};

enum class SurfaceKind { OrientableGenus, NonOrientableCrossCaps, NotAClosedSurface };

enum class SurfaceDefect { None, BadLink, Disconnected };

struct SurfaceCheck {
    bool ok = false;
    SurfaceDefect defect = SurfaceDefect::None;
    Vertex vertex = 0;  // first vertex with a bad link, when defect == BadLink
    std::string reason;
};

// Verdict of the classification. `param` is the genus for orientable
// surfaces and the cross-cap count otherwise.
struct SurfaceClass {
    SurfaceKind kind = SurfaceKind::NotAClosedSurface;
    int param = 0;
    std::optional<long long> chi;
    std::string reason;

    static SurfaceClass orientable(int g);
    static SurfaceClass crosscaps(int k);
    static SurfaceClass not_surface(std::string why);

    bool is_surface() const { return kind != SurfaceKind::NotAClosedSurface; }
    long long euler() const;  // 2 - 2g or 2 - k for surface verdicts
    bool same_surface(const SurfaceClass& other) const {
        return kind == other.kind && (kind == SurfaceKind::NotAClosedSurface || param == other.param);
    }
};

std::string kind_name(SurfaceKind kind);

// Short label such as "sphere", "torus", "genus:3" or "crosscaps:2".
std::string surface_label(const SurfaceClass& c);

// Inverse of surface_label; also accepts "genus:0", "genus:1".
std::optional<SurfaceClass> parse_surface_label(const std::string& text);

SkeletonCounts skeleton_counts(const Hypergraph3& h);
long long euler_characteristic(const Hypergraph3& h);
SurfaceCheck is_closed_surface(const Hypergraph3& h);

// Throws NotAClosedSurface when the input fails is_closed_surface.
bool is_orientable(const Hypergraph3& h);

// Never throws for non-surfaces: they come back as NotAClosedSurface.
SurfaceClass classify_surface(const Hypergraph3& h);

// f == 2v - 4 + 2g with g := 2 - chi.
bool face_count_identity(const Hypergraph3& h);

}  // namespace surfex

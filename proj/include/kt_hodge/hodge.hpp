#pragma once

#include <array>
#include <string_view>

#include "kt_hodge/sectors.hpp"

namespace kt_hodge {

enum class Provenance { Computed, SerreDual, CitedConstant };

inline std::string_view to_string(Provenance p) noexcept {
    switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::SerreDual: return "serre_dual";
    case Provenance::CitedConstant: return "cited_constant";
    }
    return "unknown";
}

/// h[p][q] for a compact almost complex 4-manifold, 0 <= p, q <= 2.
struct HodgeDiamond {
    std::array<std::array<unsigned long long, 3>, 3> h{};
    std::array<std::array<Provenance, 3>, 3> provenance{};

    unsigned long long operator()(int p, int q) const { return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
};

/// Generalized Hodge index rule for almost Kahler metrics: h^{1,1} = b^- + 1.
inline unsigned long long h11_almost_kahler(unsigned long long b_minus) { return b_minus + 1; }

/// b^- of KT^4, so that the almost Kahler rule gives h^{1,1} = 3.
inline constexpr unsigned long long kKodairaThurstonBMinus = 2;

/// h^{p,q} = h^{2-p,2-q} for every entry.
inline bool serre_check(const HodgeDiamond& diamond) {
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (diamond(p, q) != diamond(2 - p, 2 - q)) return false;
    return true;
}

/**
 * Full diamond of (KT^4, J_{a,b}) under the given metric. h^{0,1} and h^{2,0}
 * are computed; h^{0,0}, h^{1,0} and h^{1,1} are known constants; the rest
 * follow by Serre duality.
 */
inline HodgeDiamond hodge_diamond(const AcsParams& params, const MetricSpec& metric, const SweepWindow& window = {}) {
    HodgeDiamond out;
    auto set = [&](int p, int q, unsigned long long v, Provenance prov) {
        out.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = v;
        out.provenance[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = prov;
    };
    set(0, 0, 1, Provenance::CitedConstant);  // compact and connected
    set(1, 0, h10(params), Provenance::CitedConstant);
    set(2, 0, h20(params), Provenance::Computed);
    set(0, 1, h01(params, metric, window), Provenance::Computed);
    set(1, 1, h11_almost_kahler(kKodairaThurstonBMinus), Provenance::CitedConstant);
    for (auto [p, q] : {std::pair{2, 2}, std::pair{1, 2}, std::pair{0, 2}, std::pair{2, 1}}) {
        set(p, q, out(2 - p, 2 - q), Provenance::SerreDual);
    }
    return out;
}

} // namespace kt_hodge

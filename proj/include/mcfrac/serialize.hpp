#pragma once

#include <optional>
#include <string>

#include "mcfrac/verify.hpp"

namespace mcfrac {

/// Decimal rendering of an enclosure: midpoint, half-width bound and the
/// precision it was computed at. Exact values always travel next to these;
/// the decimals are never the source of truth.
struct DecimalRendering {
    std::string value;
    std::string err_bound;
    int bits;
};

DecimalRendering render_enclosure(const Enclosure& e, int bits);
DecimalRendering render_pi_ratio(const PiRatio& v, int bits);

std::string corroboration_name(Corroboration c);

/// Canonical JSON documents (sorted keys, 2-space indent, exact values as
/// strings); parse(serialize(x)) followed by serialize is byte-identical.
std::string derivation_to_json(const DerivationReport& report, int decimal_bits);
DerivationReport derivation_from_json(const std::string& text);

std::string rate_fit_to_json(const RateFit& fit);
std::string inequality_to_json(const InequalityReport& report);

std::string derivation_to_table(const DerivationReport& report, int decimal_bits);
std::string rate_fit_to_table(const RateFit& fit);
std::string inequality_to_table(const InequalityReport& report);

/// One JSON document per (family, depth) under a cache directory.
class CoefficientCache {
public:
    explicit CoefficientCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<DerivationReport> load(FamilyTag family, int depth) const;
    void store(const DerivationReport& report, int decimal_bits) const;
    /// Derivation reports found in the cache as (family, depth) pairs.
    std::vector<std::pair<FamilyTag, int>> entries() const;
    int clear() const;

    std::string path_for(FamilyTag family, int depth) const;
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

/// Loads from cache when possible, otherwise derives and stores.
DerivationReport derive_cached(const CoefficientCache* cache, FamilyTag family, int depth,
                               bool allow_uncertified, int decimal_bits);

}  // namespace mcfrac

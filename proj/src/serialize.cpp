#include "mcfrac/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mcfrac {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int decimal_digits(int bits) { return std::max(10, bits * 3 / 10); }

json enclosure_json(const Enclosure& e, int bits) {
    DecimalRendering r = render_enclosure(e, bits);
    return json{{"bits", r.bits}, {"err_bound", r.err_bound}, {"value", r.value}};
}

json pi_ratio_json(const PiRatio& v, int bits) {
    DecimalRendering r = render_pi_ratio(v, bits);
    return json{{"decimal", json{{"bits", r.bits}, {"err_bound", r.err_bound}, {"value", r.value}}},
                {"exact", v.to_string()}};
}

}  // namespace

DecimalRendering render_enclosure(const Enclosure& e, int bits) {
    int digits = decimal_digits(bits);
    BigFloat half = BigFloat::mul(e.width(), BigFloat::from_rational(Rational(1, 2), 64, MPFR_RNDU),
                                  64, MPFR_RNDU);
    return {e.midpoint().to_string(digits), half.to_string(4), bits};
}

DecimalRendering render_pi_ratio(const PiRatio& v, int bits) {
    return render_enclosure(pi_ratio_enclosure(v, bits), bits);
}

std::string corroboration_name(Corroboration c) {
    switch (c) {
        case Corroboration::Full: return "full";
        case Corroboration::Partial: return "partial";
        case Corroboration::None: return "derived-uncorroborated";
    }
    throw std::logic_error("corroboration_name: bad value");
}

namespace {

Corroboration corroboration_from_name(const std::string& s) {
    if (s == "full") return Corroboration::Full;
    if (s == "partial") return Corroboration::Partial;
    if (s == "derived-uncorroborated") return Corroboration::None;
    throw std::invalid_argument("unknown corroboration '" + s + "'");
}

}  // namespace

std::string derivation_to_json(const DerivationReport& report, int decimal_bits) {
    json terms = json::array();
    for (const auto& [num, den] : report.cf.terms) {
        DecimalRendering nd = render_pi_ratio(num, decimal_bits);
        DecimalRendering dd = render_pi_ratio(den, decimal_bits);
        terms.push_back(json{{"den_const", den.to_string()},
                             {"den_const_decimal", dd.value},
                             {"num", num.to_string()},
                             {"num_decimal", nd.value}});
    }
    json residual_coeffs = json::array();
    for (int k = report.residual.min_order(); k <= report.residual.valid_order(); ++k)
        residual_coeffs.push_back(report.residual.coeff(k).to_string());
    json doc{
        {"corroboration", corroboration_name(report.corroboration)},
        {"depth", report.cf.depth()},
        {"family", family_name(report.cf.family.tag)},
        {"limit_constant", pi_ratio_json(report.limit_constant, decimal_bits)},
        {"limit_exponent", report.limit_exponent},
        {"residual_coeffs", residual_coeffs},
        {"residual_min_order", report.residual.min_order()},
        {"residual_valid_order", report.residual.valid_order()},
        {"schema_version", 1},
        {"terms", terms},
    };
    return doc.dump(2) + "\n";
}

DerivationReport derivation_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != 1)
        throw std::invalid_argument("derivation_from_json: unsupported schema version");
    DerivationReport report;
    report.cf.family = Family::of(family_from_name(doc.at("family").get<std::string>()));
    for (const auto& t : doc.at("terms"))
        report.cf.terms.emplace_back(PiRatio::parse(t.at("num").get<std::string>()),
                                     PiRatio::parse(t.at("den_const").get<std::string>()));
    report.limit_exponent = doc.at("limit_exponent").get<int>();
    report.limit_constant =
        PiRatio::parse(doc.at("limit_constant").at("exact").get<std::string>());
    int min_order = doc.at("residual_min_order").get<int>();
    std::vector<PiRatio> coeffs;
    for (const auto& c : doc.at("residual_coeffs"))
        coeffs.push_back(PiRatio::parse(c.get<std::string>()));
    int valid = doc.at("residual_valid_order").get<int>();
    report.residual =
        TruncSeries::from_coeffs(min_order, std::move(coeffs)).truncated(valid);
    report.corroboration =
        corroboration_from_name(doc.at("corroboration").get<std::string>());
    return report;
}

std::string rate_fit_to_json(const RateFit& fit) {
    json samples = json::array();
    for (const auto& s : fit.samples) {
        json e = enclosure_json(s.value, s.value.precision());
        e["n"] = s.n;
        samples.push_back(e);
    }
    json steps = json::array();
    for (double s : fit.exponent_steps) steps.push_back(json(std::to_string(s)));
    json doc{
        {"exponent_steps", steps},
        {"extrapolated_constant",
         enclosure_json(fit.extrapolated_constant, fit.extrapolated_constant.precision())},
        {"fitted_constant", enclosure_json(fit.fitted_constant, fit.fitted_constant.precision())},
        {"fitted_exponent", fit.fitted_exponent.to_string(8)},
        {"loglog_exponent", std::to_string(fit.loglog_exponent)},
        {"samples", samples},
        {"target_constant", pi_ratio_json(fit.target_constant, 192)},
        {"target_exponent", fit.target_exponent},
    };
    return doc.dump(2) + "\n";
}

std::string inequality_to_json(const InequalityReport& report) {
    json verdicts = json::array();
    for (const auto& [n, v] : report.verdicts)
        verdicts.push_back(json{{"n", n}, {"verdict", verdict_name(v)}});
    json doc{
        {"base_precision", report.base_precision},
        {"counts",
         json{{"certified_false", report.count(Verdict::CertifiedFalse)},
              {"certified_true", report.count(Verdict::CertifiedTrue)},
              {"inconclusive", report.count(Verdict::Inconclusive)}}},
        {"max_precision_used", report.max_precision_used},
        {"n_max", report.n_max},
        {"n_min", report.n_min},
        {"theorem", report.theorem},
        {"verdicts", verdicts},
    };
    return doc.dump(2) + "\n";
}

std::string derivation_to_table(const DerivationReport& report, int decimal_bits) {
    std::ostringstream out;
    out << "family: " << family_name(report.cf.family.tag) << "   depth: " << report.cf.depth()
        << "   corroboration: " << corroboration_name(report.corroboration) << "\n";
    for (int j = 0; j < report.cf.depth(); ++j) {
        const auto& [num, den] = report.cf.terms[static_cast<size_t>(j)];
        out << "  level " << (j + 1) << " numerator      " << num.to_string() << "\n";
        out << "  level " << (j + 1) << " denom constant " << den.to_string() << "\n";
    }
    DecimalRendering r = render_pi_ratio(report.limit_constant, decimal_bits);
    out << "  limit exponent " << report.limit_exponent << "\n";
    out << "  limit constant " << report.limit_constant.to_string() << "\n";
    out << "                 = " << r.value << " (+/- " << r.err_bound << ", " << r.bits
        << " bits)\n";
    return out.str();
}

std::string rate_fit_to_table(const RateFit& fit) {
    std::ostringstream out;
    out << "target exponent " << fit.target_exponent << ", fitted "
        << fit.fitted_exponent.to_string(8) << " (log-log cross-check "
        << fit.loglog_exponent << ")\n";
    out << "samples (n, E_k(n)):\n";
    for (const auto& s : fit.samples)
        out << "  n = " << s.n << "   " << s.value.midpoint().to_string(20) << "\n";
    DecimalRendering c = render_enclosure(fit.fitted_constant, fit.fitted_constant.precision());
    DecimalRendering x =
        render_enclosure(fit.extrapolated_constant, fit.extrapolated_constant.precision());
    DecimalRendering t = render_pi_ratio(fit.target_constant, 192);
    out << "fitted constant  " << c.value << " (extrapolated " << x.value << ")\n";
    out << "target constant  " << t.value << "  (exact " << fit.target_constant.to_string()
        << ")\n";
    return out.str();
}

std::string inequality_to_table(const InequalityReport& report) {
    std::ostringstream out;
    out << "theorem " << report.theorem << " on n in " << report.n_min << ".." << report.n_max
        << " (precision " << report.base_precision << ".." << report.max_precision_used << ")\n";
    out << "  certified-true:  " << report.count(Verdict::CertifiedTrue) << "\n";
    out << "  inconclusive:    " << report.count(Verdict::Inconclusive) << "\n";
    out << "  certified-false: " << report.count(Verdict::CertifiedFalse) << "\n";
    for (const auto& [n, v] : report.verdicts)
        if (v != Verdict::CertifiedTrue) out << "  n = " << n << ": " << verdict_name(v) << "\n";
    return out.str();
}

std::string CoefficientCache::path_for(FamilyTag family, int depth) const {
    return (fs::path(dir_) / (family_name(family) + "_" + std::to_string(depth) + ".json"))
        .string();
}

std::optional<DerivationReport> CoefficientCache::load(FamilyTag family, int depth) const {
    fs::path p(path_for(family, depth));
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return derivation_from_json(buf.str());
}

void CoefficientCache::store(const DerivationReport& report, int decimal_bits) const {
    fs::create_directories(dir_);
    std::ofstream out(path_for(report.cf.family.tag, report.cf.depth()));
    out << derivation_to_json(report, decimal_bits);
}

std::vector<std::pair<FamilyTag, int>> CoefficientCache::entries() const {
    std::vector<std::pair<FamilyTag, int>> found;
    if (!fs::exists(dir_)) return found;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json") continue;
        std::string stem = entry.path().stem().string();
        auto sep = stem.rfind('_');
        if (sep == std::string::npos) continue;
        try {
            found.emplace_back(family_from_name(stem.substr(0, sep)),
                               std::stoi(stem.substr(sep + 1)));
        } catch (const std::exception&) {
            continue;  // not a cache entry
        }
    }
    return found;
}

int CoefficientCache::clear() const {
    int removed = 0;
    for (const auto& [family, depth] : entries()) {
        fs::remove(path_for(family, depth));
        ++removed;
    }
    return removed;
}

DerivationReport derive_cached(const CoefficientCache* cache, FamilyTag family, int depth,
                               bool allow_uncertified, int decimal_bits) {
    if (cache) {
        if (auto hit = cache->load(family, depth)) return *hit;
    }
    DerivationReport report = derive(Family::of(family), depth, allow_uncertified);
    if (cache) cache->store(report, decimal_bits);
    return report;
}

}  // namespace mcfrac
